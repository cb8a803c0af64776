"""Exact rank computations over Q and GF(p).

Boundary matrices here are sparse with entries +-1, so a sparse column-echelon
reduction with exact arithmetic is both fast and exact.  Over Q the arithmetic
stays in Python ints as long as pivots are +-1 (always true in practice for
simplicial boundary maps) and falls back to Fraction otherwise.  Over GF(p)
everything is an int mod p.
"""

from __future__ import annotations

from fractions import Fraction


class Field:
    """Coefficient field: the rationals ('q') or a prime field GF(p)."""

    def __init__(self, p=None):
        if p is not None:
            if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
                raise ValueError(f"not a prime: {p}")
        self.p = p

    @classmethod
    def parse(cls, token):
        token = str(token).strip().lower()
        if token in ("q", "0", "rational", "rationals"):
            return cls(None)
        if not token.isdigit():
            raise ValueError(f"bad field {token!r}: expected 'q' or a prime")
        return cls(int(token))

    @property
    def is_rational(self):
        return self.p is None

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"GF({self.p})"


def rank(columns, field):
    """Rank of a sparse integer matrix given as a list of columns.

    Each column is a dict {row_index: int_coefficient}.  Exact over the given
    field.  Reduction is the standard low-pivot column echelon: each column is
    reduced against previously fixed pivot columns until its lowest nonzero row
    is fresh or the column dies.
    """
    p = field.p
    pivots = {}  # row -> reduced column with that low row
    rk = 0
    for col in columns:
        if p is None:
            cur = {r: c for r, c in col.items() if c}
        else:
            cur = {}
            for r, c in col.items():
                c %= p
                if c:
                    cur[r] = c
        while cur:
            low = max(cur)
            other = pivots.get(low)
            if other is None:
                pivots[low] = cur
                rk += 1
                break
            cur = _eliminate(cur, other, low, p)
    return rk


def _eliminate(cur, other, low, p):
    """Return cur - (cur[low]/other[low]) * other, dropping zeros."""
    a, b = cur[low], other[low]
    if p is not None:
        factor = a * pow(b, -1, p) % p
        out = dict(cur)
        for r, c in other.items():
            v = (out.get(r, 0) - factor * c) % p
            if v:
                out[r] = v
            else:
                out.pop(r, None)
        return out
    # rational path: keep ints when the pivot divides evenly, else Fractions
    if a % b == 0:
        factor = a // b
        out = dict(cur)
        for r, c in other.items():
            v = out.get(r, 0) - factor * c
            if v:
                out[r] = v
            else:
                out.pop(r, None)
        return out
    factor = Fraction(a, b)
    out = {r: Fraction(c) for r, c in cur.items()}
    for r, c in other.items():
        v = out.get(r, 0) - factor * c
        if v:
            out[r] = v
        else:
            out.pop(r, None)
    return out
