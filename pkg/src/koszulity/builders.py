"""Stock posets: chains, Boolean lattices, named test fixtures, semigroup
intervals and divisor posets, face posets of complexes."""

from __future__ import annotations

from fractions import Fraction

from .complexes import SimplicialComplex
from .posets import Poset, PosetError


def chain(n):
    """Chain with n elements labelled 1..n (n = 0 gives the empty poset)."""
    elements = [str(i + 1) for i in range(n)]
    covers = [(str(i + 1), str(i + 2)) for i in range(n - 1)]
    coords = {str(i + 1): (i,) for i in range(n)}
    return Poset.from_covers(elements, covers, coords)


def boolean_lattice(n):
    """Subset lattice of an n-set; elements are bitmask strings "0".."2^n-1".

    Coordinates are the bit vectors, so the semigroup relation applies.
    """
    elements = [str(m) for m in range(1 << n)]
    covers = []
    for m in range(1 << n):
        for b in range(n):
            if not m & (1 << b):
                covers.append((str(m), str(m | (1 << b))))
    coords = {str(m): tuple((m >> b) & 1 for b in range(n))
              for m in range(1 << n)}
    return Poset.from_covers(elements, covers, coords)


def antichain(n):
    return Poset.from_covers([str(i + 1) for i in range(n)], [])


_FIXTURE_COVERS = {
    "POSET8": (
        list("12345678"),
        [("1", "2"), ("1", "3"), ("1", "6"), ("1", "7"),
         ("2", "4"), ("2", "5"), ("3", "4"), ("3", "5"),
         ("4", "8"), ("5", "8"), ("6", "8"), ("7", "8")],
    ),
    "N5": (
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    ),
    "DIAMOND": (
        ["0", "a", "b", "1"],
        [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    ),
    "DBLCHAIN": (
        ["0", "a", "b", "c", "d", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"),
         ("0", "c"), ("c", "d"), ("d", "1")],
    ),
}


def fixture_names():
    return tuple(sorted(_FIXTURE_COVERS)) + ("MOEBIUS",)


def moebius_band():
    """5-vertex triangulation of the Moebius band (facets 123..512).

    Its bounded face poset is the recorded quadratic-but-not-Koszul witness:
    the band retracts to a circle, so the top layer of the big open interval
    carries 1-dimensional homology over every field, yet all the face
    adjacency graphs stay connected.
    """
    verts = [1, 2, 3, 4, 5]
    facets = [(1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 1), (5, 1, 2)]
    return SimplicialComplex.from_faces(verts, facets)


def named_fixture(name):
    if name.upper() == "MOEBIUS":
        return face_poset(moebius_band()).bounded_extension()
    try:
        elements, covers = _FIXTURE_COVERS[name.upper()]
    except KeyError:
        raise PosetError(f"unknown fixture {name!r}; "
                         f"have {', '.join(fixture_names())}") from None
    return Poset.from_covers(elements, covers)


def semigroup_interval(generators, top, functional=None):
    """Divisibility interval [0, top] in the affine semigroup spanned by the
    generators, as a coordinate-tagged poset.

    The functional (rational coefficients) must be strictly positive on every
    generator; it bounds the enumeration.  Defaults to the coordinate sum
    when that is strictly positive on all generators.  Elements are the
    semigroup points σ with both σ and top−σ generator-sums; σ ≤ τ iff τ−σ
    is one.  Identifiers are comma-joined coordinates.
    """
    generators = [tuple(g) for g in generators]
    top = tuple(top)
    n = len(top)
    if any(len(g) != n for g in generators):
        raise PosetError("generator arity does not match top")
    if functional is None:
        functional = (1,) * n
        if any(sum(g) <= 0 for g in generators):
            raise PosetError(
                "default functional (coordinate sum) is not strictly "
                "positive on every generator; pass one explicitly")
    functional = tuple(Fraction(c) for c in functional)

    def f(pt):
        return sum(c * x for c, x in zip(functional, pt))

    for g in generators:
        if f(g) <= 0:
            raise PosetError(f"functional not strictly positive on {g}")
    bound = f(top)
    universe = {(0,) * n}
    frontier = [(0,) * n]
    while frontier:
        nxt = []
        for pt in frontier:
            for g in generators:
                q = tuple(a + b for a, b in zip(pt, g))
                if q not in universe and f(q) <= bound:
                    universe.add(q)
                    nxt.append(q)
        frontier = nxt
    points = sorted(p for p in universe
                    if tuple(t - a for t, a in zip(top, p)) in universe)
    ids = [",".join(str(c) for c in p) for p in points]
    rows = []
    for p in points:
        row = {k for k, q in enumerate(points)
               if tuple(b - a for a, b in zip(p, q)) in universe}
        rows.append(frozenset(row))
    coords = dict(zip(ids, points))
    return Poset(ids, rows, coords)


def divisor_poset(exponents):
    """Divisors of the monomial with the given exponent vector."""
    n = len(exponents)
    gens = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    return semigroup_interval(gens, tuple(exponents))


def face_poset(cx):
    """Poset of nonempty faces of a complex, ordered by inclusion.

    Identifiers join the vertex names with '+' in universe order.
    """
    faces = sorted((f for f in cx.faces() if f),
                   key=lambda f: (len(f), cx.face_key(f)))

    def name(f):
        return "+".join(str(v) for v in sorted(f, key=cx.vertex_key))

    names = [name(f) for f in faces]
    pos = {f: i for i, f in enumerate(faces)}
    rows = [frozenset(pos[g] for g in faces if f <= g) for f in faces]
    return Poset(names, rows)
