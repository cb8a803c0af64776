"""Finite poset container: construction, intervals, chains, gradedness."""

import pytest

from koszulity import Poset, PosetError, named_fixture, chain, boolean_lattice

from genposets import iso_posets, poset_from_relation


def test_from_covers_basic():
    p = Poset.from_covers(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert p.elements == ("a", "b", "c")
    assert p.leq("a", "c")
    assert not p.leq("c", "a")
    assert p.leq("b", "b")


def test_from_covers_rejects_duplicate_identifier():
    with pytest.raises(PosetError):
        Poset.from_covers(["a", "a"], [])


def test_from_covers_rejects_unknown_element():
    with pytest.raises(PosetError):
        Poset.from_covers(["a"], [("a", "b")])


def test_from_covers_rejects_self_cover():
    with pytest.raises(PosetError):
        Poset.from_covers(["a"], [("a", "a")])


def test_from_covers_rejects_cycle():
    with pytest.raises(PosetError):
        Poset.from_covers(["a", "b", "c"],
                          [("a", "b"), ("b", "c"), ("c", "a")])


def test_covers_are_hasse_reduced():
    # the redundant relation a<c is implied and must not appear as a cover
    p = Poset.from_covers(["a", "b", "c"],
                          [("a", "b"), ("b", "c"), ("a", "c")])
    assert p.covers == (("a", "b"), ("b", "c"))
    q = chain(3)
    assert q.covers == (("1", "2"), ("2", "3"))


def test_interval_length():
    n5 = named_fixture("N5")
    assert n5.interval_length("0", "1") == 3
    assert n5.interval_length("0", "c") == 1
    assert n5.interval_length("c", "c") == 0
    with pytest.raises(PosetError):
        n5.interval_length("a", "c")


def test_open_and_closed_intervals():
    n5 = named_fixture("N5")
    assert n5.open_interval("0", "1").elements == ("a", "b", "c")
    assert n5.closed_interval("0", "1").elements == n5.elements
    assert n5.open_interval("0", "b").elements == ("a",)
    assert n5.open_interval("0", "c").elements == ()
    with pytest.raises(PosetError):
        n5.open_interval("c", "a")


def test_restrict_preserves_coords():
    b2 = boolean_lattice(2)
    sub = b2.restrict(["0", "1", "3"])
    assert sub.elements == ("0", "1", "3")
    assert sub.coords["1"] == b2.coords["1"] == (1, 0)
    assert sub.leq("0", "3")
    assert not sub.leq("1", "0")


def test_bounded_extension():
    p = Poset.from_covers(["a", "b"], [])
    q = p.bounded_extension()
    assert q.elements == ("_bot", "a", "b", "_top")
    assert q.leq("_bot", "a") and q.leq("b", "_top") and q.leq("_bot", "_top")
    assert not q.leq("a", "b")
    assert q.interval_length("_bot", "_top") == 2


def test_bounded_extension_rejects_identifier_collision():
    p = Poset.from_covers(["_bot", "x"], [("_bot", "x")])
    with pytest.raises(PosetError):
        p.bounded_extension()
    # a custom fresh name works
    q = p.bounded_extension(bottom="lo", top="hi")
    assert q.elements[0] == "lo" and q.elements[-1] == "hi"


def test_order_complex_shapes():
    full = chain(3).order_complex()
    assert full.facets == (frozenset({"1", "2", "3"}),)
    pts = Poset.from_covers(["a", "b", "c"], []).order_complex()
    assert sorted(map(sorted, pts.facets)) == [["a"], ["b"], ["c"]]
    void = Poset.from_covers([], []).order_complex()
    assert void.void


def test_maximal_chains_between():
    n5 = named_fixture("N5")
    chains = set(n5.maximal_chains_between("0", "1"))
    assert chains == {("0", "a", "b", "1"), ("0", "c", "1")}
    assert list(n5.maximal_chains_between("c", "c")) == [("c",)]
    with pytest.raises(PosetError):
        n5.maximal_chains_between("1", "0")


def test_is_graded_fixtures():
    assert named_fixture("DIAMOND").is_graded() == (True, None)
    assert named_fixture("N5").is_graded() == (False, ("0", "1"))
    assert named_fixture("POSET8").is_graded() == (False, ("1", "8"))
    assert chain(5).is_graded() == (True, None)


def length_additive(p):
    """Whether interval length is additive over every x <= y <= z."""
    for i, j in p.comparable_pairs():
        for k in range(len(p.elements)):
            if p.leq_idx(i, k) and p.leq_idx(k, j):
                if p.length_idx(i, j) != p.length_idx(i, k) + p.length_idx(k, j):
                    return False
    return True


def test_graded_iff_length_additive():
    # gradedness is exactly additivity of the longest-chain length
    for n in range(6):
        for rel in iso_posets(n):
            p = poset_from_relation(n, rel)
            graded, witness = p.is_graded()
            assert graded == length_additive(p)
            if not graded:
                x, y = witness
                assert p.leq(x, y)
                gaps = [mid for mid in p.elements
                        if p.leq(x, mid) and p.leq(mid, y)
                        and p.interval_length(x, y)
                        != p.interval_length(x, mid) + p.interval_length(mid, y)]
                assert gaps


def test_length_superadditivity():
    # concatenating chains through y never overshoots the longest chain
    for n in range(6):
        for rel in iso_posets(n):
            p = poset_from_relation(n, rel)
            for i, j in p.comparable_pairs():
                for k in range(n):
                    if p.leq_idx(i, k) and p.leq_idx(k, j):
                        assert (p.length_idx(i, j)
                                >= p.length_idx(i, k) + p.length_idx(k, j))
