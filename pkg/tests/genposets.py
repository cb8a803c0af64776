"""Shared generators for the test suite: exhaustive isomorphism-free poset
enumeration, random posets, random monomial ideals, random complexes.

Enumeration strategy: a finite poset always admits a linear extension, so
every isomorphism class has a representative whose strict order relation only
contains pairs (i, j) with i < j.  We enumerate those "naturally labelled"
transitive relations directly, then deduplicate by the least relabelled pair
set over all linear extensions (relabelling by a linear extension is exactly
what keeps a labelling natural, so the minimum is a class invariant).
"""

import itertools
import random

from koszulity import (Poset, SimplicialComplex, ideal_from_generators,
                       trivial_relation, validate_axioms)

# unlabelled posets on 0,1,2,... elements; the generator self-checks
ISO_COUNTS = (1, 1, 2, 5, 16, 63, 318)


def validated_trivial(poset):
    relation = trivial_relation(poset)
    validate_axioms(relation)
    assert relation.validated
    return relation


def named_entries(relation, table):
    """Tor entries keyed by representative element names instead of point
    class ids, for readable expected values."""
    elements = relation.poset.elements
    out = {}
    for (s, t, i, j), v in table.entries.items():
        out[(elements[relation.classes[s].rep[0]],
             elements[relation.classes[t].rep[0]], i, j)] = v
    return out


def natural_relations(n):
    """All transitive strict relations on range(n) contained in i < j.

    Grown column by column: when element j arrives, pick its down-set among
    0..j-1, which must be closed downwards in the relation built so far.
    """
    pairs = list(itertools.combinations(range(n), 2))
    rels = [frozenset()]
    for j in range(n):
        grown = []
        for rel in rels:
            below = {i: {a for a, b in rel if b == i} for i in range(j)}
            for picks in itertools.product((False, True), repeat=j):
                down = {i for i in range(j) if picks[i]}
                if all(below[i] <= down for i in down):
                    grown.append(rel | {(i, j) for i in down})
        rels = grown
    return rels


def linear_extensions(n, rel):
    """Permutations p (as old->new position lists) with rel mapped into <."""
    above = {i: {b for a, b in rel if a == i} for i in range(n)}
    indeg = {i: sum(1 for a, b in rel if b == i) for i in range(n)}
    out = []

    def place(order, remaining, deg):
        if not remaining:
            out.append(order)
            return
        for i in sorted(remaining):
            if deg[i] == 0:
                deg2 = dict(deg)
                for b in above[i]:
                    deg2[b] -= 1
                place(order + (i,), remaining - {i}, deg2)

    place((), frozenset(range(n)), indeg)
    perms = []
    for order in out:
        p = [0] * n
        for pos, i in enumerate(order):
            p[i] = pos
        perms.append(p)
    return perms


def canonical_key(n, rel):
    if not rel:
        return ()
    best = None
    for p in linear_extensions(n, rel):
        key = tuple(sorted((p[a], p[b]) for a, b in rel))
        if best is None or key < best:
            best = key
    return best


def iso_posets(n):
    """One naturally labelled representative per isomorphism class."""
    seen = {}
    for rel in natural_relations(n):
        key = canonical_key(n, rel)
        if key not in seen:
            seen[key] = rel
    reps = list(seen.values())
    if n < len(ISO_COUNTS) and len(reps) != ISO_COUNTS[n]:
        raise AssertionError(
            f"enumeration bug: {len(reps)} classes on {n} elements, "
            f"expected {ISO_COUNTS[n]}")
    return reps


def poset_from_relation(n, rel):
    ids = [str(i + 1) for i in range(n)]
    rows = [frozenset({i} | {b for a, b in rel if a == i}) for i in range(n)]
    return Poset(ids, rows)


def random_poset(rng, n):
    """Random naturally labelled poset: keep each i<j pair with probability
    1/2 as a relation seed, then close transitively."""
    rel = {(i, j) for i, j in itertools.combinations(range(n), 2)
           if rng.random() < 0.5}
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), list(rel)):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return poset_from_relation(n, rel)


def random_ideal(rng, relation, max_generators=3):
    """Random monomial right ideal from 1..max_generators positive-length
    generator classes; None when the relation has no positive class."""
    positive = [c.cid for c in relation.classes if c.length >= 1]
    if not positive:
        return None
    k = rng.randint(1, min(max_generators, len(positive)))
    return ideal_from_generators(relation, rng.sample(positive, k))


def random_complex(rng, n, max_facets=None):
    """Random complex on 1..n: a few random candidate facets (possibly
    nested, from_faces cleans that up)."""
    if max_facets is None:
        max_facets = n + 1
    verts = list(range(1, n + 1))
    k = rng.randint(1, max_facets)
    facets = []
    for _ in range(k):
        size = rng.randint(1, n)
        facets.append(tuple(rng.sample(verts, size)))
    return SimplicialComplex.from_faces(verts, facets)


def all_complexes(n, include_trivial=False):
    """Every simplicial complex whose vertex support sits inside 1..n,
    enumerated as antichains of nonempty subsets.  The void complex and
    {empty face} come first when include_trivial is set."""
    universe = list(range(1, n + 1))
    subsets = []
    for size in range(1, n + 1):
        subsets.extend(frozenset(c)
                       for c in itertools.combinations(universe, size))
    out = []
    if include_trivial:
        out.append(SimplicialComplex.void_complex(universe))
        out.append(SimplicialComplex.empty_face_complex(universe))

    def grow(start, chosen):
        for k in range(start, len(subsets)):
            s = subsets[k]
            if any(s <= t or t <= s for t in chosen):
                continue
            out.append(SimplicialComplex.from_faces(universe, chosen + [s]))
            grow(k + 1, chosen + [s])

    grow(0, [])
    return out
