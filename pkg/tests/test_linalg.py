"""Field parsing and sparse rank against a dense reference."""

import random
from fractions import Fraction

import pytest

from koszulity import Field
from koszulity.linalg import rank


def dense_rank(columns, p):
    """Plain Gaussian elimination on a dense matrix, rationals or mod p."""
    nrows = 0
    for col in columns:
        for r in col:
            nrows = max(nrows, r + 1)
    if p is None:
        mat = [[Fraction(col.get(r, 0)) for col in columns] for r in range(nrows)]
    else:
        mat = [[col.get(r, 0) % p for col in columns] for r in range(nrows)]
    rk = 0
    for c in range(len(columns)):
        piv = None
        for r in range(rk, nrows):
            if mat[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        inv = Fraction(1, 1) / mat[rk][c] if p is None else pow(mat[rk][c], p - 2, p)
        for r in range(nrows):
            if r != rk and mat[r][c] != 0:
                factor = mat[r][c] * inv
                for cc in range(c, len(columns)):
                    val = mat[r][cc] - factor * mat[rk][cc]
                    mat[r][cc] = val if p is None else val % p
        rk += 1
    return rk


def test_field_parse_accepts_known_spellings():
    assert Field.parse("q").p is None
    assert Field.parse("Q").p is None
    assert Field.parse("0").p is None
    assert Field.parse("rational").p is None
    assert Field.parse("rationals").p is None
    assert Field.parse("2").p == 2
    assert Field.parse("13").p == 13


@pytest.mark.parametrize("bad", ["4", "6", "9", "1", "-3", "x", "2.0", ""])
def test_field_parse_rejects_nonprime_and_junk(bad):
    with pytest.raises(ValueError):
        Field.parse(bad)


def test_field_repr():
    assert repr(Field(None)) == "Q"
    assert repr(Field(5)) == "GF(5)"


def test_rank_trivial_cases():
    q = Field(None)
    assert rank([], q) == 0
    assert rank([{}], q) == 0
    assert rank([{0: 1}], q) == 1
    assert rank([{0: 1}, {0: 2}], q) == 1
    assert rank([{0: 1}, {1: 1}], q) == 2


def test_rank_depends_on_characteristic():
    # the column (2) is zero mod 2 but not over the rationals
    col = [{0: 2}]
    assert rank(col, Field(None)) == 1
    assert rank(col, Field(2)) == 0
    assert rank(col, Field(3)) == 1

    # 2x2 matrix with determinant 3: drops rank exactly in GF(3)
    cols = [{0: 1, 1: 1}, {0: 2, 1: 5}]
    assert rank(cols, Field(None)) == 2
    assert rank(cols, Field(3)) == 1
    assert rank(cols, Field(2)) == 2


def test_rank_fraction_fallback_path():
    # entries engineered so integer pivoting has to clear a non-divisible
    # entry; result must still match the dense rational reference
    cols = [{0: 2, 1: 3}, {0: 3, 1: 5}, {0: 5, 1: 8}]
    assert rank(cols, Field(None)) == dense_rank(cols, None) == 2


def test_rank_random_matrices_match_dense_reference():
    rng = random.Random(20240817)
    fields = [(Field(None), None), (Field(2), 2), (Field(3), 3), (Field(5), 5)]
    for trial in range(30):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        density = rng.choice([0.2, 0.4, 0.7])
        cols = []
        for _ in range(ncols):
            col = {}
            for r in range(nrows):
                if rng.random() < density:
                    col[r] = rng.randint(-4, 4)
            cols.append({r: v for r, v in col.items() if v})
        for fld, p in fields:
            assert rank(cols, fld) == dense_rank(cols, p), (trial, fld)


def test_rank_rectangular_bound():
    rng = random.Random(7)
    for _ in range(10):
        cols = [{r: rng.randint(0, 2) for r in range(3)} for _ in range(6)]
        cols = [{r: v for r, v in c.items() if v} for c in cols]
        assert rank(cols, Field(None)) <= 3
