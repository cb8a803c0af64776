"""Builders for named posets, lattices, semigroup windows and face posets."""

import pytest

from koszulity import (PosetError, SimplicialComplex, antichain,
                       boolean_lattice, chain, divisor_poset, face_poset,
                       fixture_names, moebius_band, named_fixture,
                       semigroup_interval)


def test_chain():
    assert chain(0).elements == ()
    c = chain(3)
    assert c.elements == ("1", "2", "3")
    assert c.coords == {"1": (0,), "2": (1,), "3": (2,)}
    assert c.interval_length("1", "3") == 2
    assert c.covers == (("1", "2"), ("2", "3"))


def test_antichain():
    a = antichain(3)
    assert len(a.elements) == 3
    assert a.covers == ()
    assert not a.leq("1", "2")


def test_boolean_lattice():
    b2 = boolean_lattice(2)
    d = named_fixture("DIAMOND")
    assert len(b2.elements) == len(d.elements) == 4
    assert len(b2.covers) == len(d.covers) == 4
    assert b2.is_graded() == (True, None)
    assert b2.coords["3"] == (1, 1)
    b3 = boolean_lattice(3)
    assert len(b3.elements) == 8 and len(b3.covers) == 12
    assert b3.interval_length("0", "7") == 3


def test_fixture_names_and_shapes():
    assert fixture_names() == ("DBLCHAIN", "DIAMOND", "N5", "POSET8",
                               "MOEBIUS")
    p8 = named_fixture("POSET8")
    assert len(p8.elements) == 8 and len(p8.covers) == 12
    n5 = named_fixture("N5")
    assert len(n5.elements) == 5 and len(n5.covers) == 5
    dbl = named_fixture("DBLCHAIN")
    assert len(dbl.elements) == 6
    with pytest.raises(PosetError):
        named_fixture("NOPE")


def test_moebius_fixture():
    band = moebius_band()
    assert len(band.universe) == 5
    assert len(band.facets) == 5
    assert all(len(f) == 3 for f in band.facets)
    fp = face_poset(band)
    assert len(fp.elements) == 20
    bounded = named_fixture("MOEBIUS")
    assert len(bounded.elements) == 22
    assert bounded.elements[0] == "_bot" and bounded.elements[-1] == "_top"


def test_semigroup_interval_square():
    b2 = semigroup_interval([(1, 0), (0, 1)], (1, 1))
    assert b2.elements == ("0,0", "0,1", "1,0", "1,1")
    assert b2.coords["1,0"] == (1, 0)
    assert b2.interval_length("0,0", "1,1") == 2


def test_semigroup_interval_twisted_cubic():
    # numerical-semigroup style window: three generators, none a sum of the
    # others, truncated at (2,2)
    tc = semigroup_interval([(1, 0), (1, 1), (1, 2)], (2, 2))
    assert tc.elements == ("0,0", "1,0", "1,1", "1,2", "2,2")
    assert tc.covers == (("0,0", "1,0"), ("0,0", "1,1"), ("0,0", "1,2"),
                         ("1,0", "2,2"), ("1,1", "2,2"), ("1,2", "2,2"))


def test_semigroup_interval_errors():
    with pytest.raises(PosetError, match="strictly positive"):
        semigroup_interval([(1, 0), (0, 0)], (1, 1))
    with pytest.raises(PosetError, match="arity"):
        semigroup_interval([(1, 0), (0, 1, 2)], (1, 1))


def test_semigroup_interval_custom_functional():
    # generators with a zero coordinate-sum need an explicit functional
    gens = [(1, -1), (0, 1)]
    with pytest.raises(PosetError):
        semigroup_interval(gens, (1, 0))
    p = semigroup_interval(gens, (1, 0), functional=(2, 1))
    assert "0,0" in p.elements and "1,0" in p.elements


def test_divisor_poset():
    d = divisor_poset((2, 1))
    assert len(d.elements) == 6
    assert d.interval_length("0,0", "2,1") == 3
    assert d.is_graded() == (True, None)
    single = divisor_poset((2,))
    assert single.elements == ("0", "1", "2")


def test_face_poset():
    edge = SimplicialComplex.from_faces((1, 2), [(1, 2)])
    fp = face_poset(edge)
    assert fp.elements == ("1", "2", "1+2")
    assert fp.covers == (("1", "1+2"), ("2", "1+2"))
    assert fp.leq("1", "1+2")
