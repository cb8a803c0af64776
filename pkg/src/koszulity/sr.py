"""Squarefree monomial ideals, componentwise linearity, and the duality
cross-check against sequential Cohen-Macaulayness of the Alexander dual.

The bridge: generators of the ideal of a complex become interval classes in
the divisor poset of the squarefree top monomial under the coordinate
difference relation; componentwise linearity is then the sequential
acyclicity sweep over the right ideal they generate.  Only squarefree
classes enter the verdict; classes with an exponent 2 or more live in a
bigger ambient poset and their layers are separately checked to carry no
homology at all (test support, not the hot path).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .builders import divisor_poset
from .engine import (PreconditionError, ideal_from_generators,
                     is_koszul_ideal, restricted_complex)
from .homology import is_seq_cm, is_cm, reduced_homology
from .relations import semigroup_relation, validate_axioms

FINITE_RESTRICTION_NOTE = (
    "verdict computed on the finite squarefree divisor poset; classes with "
    "higher exponents contribute no homology and are omitted")

_ambient_cache = {}


def squarefree_ambient(n, exponent=1):
    """Divisor-poset ambient with the coordinate-difference relation,
    cached per (n, exponent).

    Realizability of concatenations (axiom A4) cannot hold in a finite
    window onto the divisor lattice: a pair of classes whose exponent sum
    exceeds the top monomial composes fine in the unbounded lattice but has
    no realization below the top.  Those are the only failures, every
    product the bridge takes stays inside the window, so the relation is
    marked usable after the other axioms check out and each A4 witness is
    confirmed to be of the boundary kind.
    """
    key = (n, exponent)
    if key not in _ambient_cache:
        poset = divisor_poset((exponent,) * n)
        relation = semigroup_relation(poset)
        reports = validate_axioms(relation)
        for r in reports:
            if r.verdict == "fail" and r.axiom != "A4":
                raise PreconditionError(
                    f"divisor poset ambient fails axiom {r.axiom}")
        # Window soundness: any pair whose exponent sum stays under the top
        # must be realizable, so the only concatenations A4 can miss are the
        # escaping ones.
        for a in relation.classes:
            da = _class_exponents(relation, a.cid)
            for b in relation.classes:
                db = _class_exponents(relation, b.cid)
                if all(x + y <= exponent for x, y in zip(da, db)):
                    if not any(relation.extensions(hi, b.cid)
                               for (_, hi) in a.members):
                        raise PreconditionError(
                            "divisor poset ambient misses a composition "
                            "inside the window: "
                            f"{monomial_name(da)} * {monomial_name(db)}")
        relation.validated = True
        _ambient_cache[key] = relation
    return _ambient_cache[key]


@dataclass
class SquarefreeIdeal:
    n: int
    generators: tuple  # frozensets of vertex indices (1-based), minimal

    @property
    def is_zero(self):
        return not self.generators

    def generator_degrees(self):
        return sorted(len(g) for g in self.generators)


def ideal_of_complex(cx, n=None):
    """Squarefree ideal generated by the minimal non-faces of the complex.

    The vertex universe must be 1..n; the full simplex yields the zero
    ideal (reported as such, downstream operations reject it).
    """
    if n is None:
        n = len(cx.universe)
    universe = tuple(range(1, n + 1))
    if tuple(cx.universe) != universe:
        raise PreconditionError(
            f"vertex universe must be 1..{n}, got {cx.universe!r}")
    if cx.void:
        # no faces at all: even the empty monomial is a non-face
        return SquarefreeIdeal(n, (frozenset(),))
    non_faces = []
    faces = cx.faces()
    for size in range(1, n + 1):
        for comb in itertools.combinations(universe, size):
            s = frozenset(comb)
            if s not in faces and not any(g <= s for g in non_faces):
                non_faces.append(s)
    return SquarefreeIdeal(n, tuple(sorted(non_faces, key=sorted)))


def _gen_cid(relation, gen):
    """Interval class of a squarefree generator inside the ambient."""
    n = len(relation.poset.coords[relation.poset.elements[0]])
    vec = tuple(1 if i + 1 in gen else 0 for i in range(n))
    bottom = ",".join(["0"] * n)
    top = ",".join(str(v) for v in vec)
    return relation.cid_of(bottom, top)


def monomial_name(coords):
    """Display name like x1x2^2 for an exponent vector."""
    parts = []
    for i, e in enumerate(coords):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "".join(parts) or "1"


def _class_exponents(relation, cid):
    lo, hi = relation.classes[cid].rep
    P = relation.poset
    a = P.coords[P.elements[lo]]
    b = P.coords[P.elements[hi]]
    return tuple(y - x for x, y in zip(a, b))


def bridge_ideal(sq, exponent=1):
    """The right ideal generated by the squarefree generators inside the
    (cached, validated) divisor-poset ambient."""
    if sq.is_zero:
        raise PreconditionError("zero ideal: the complex is the full simplex")
    if any(not g for g in sq.generators):
        raise PreconditionError("unit ideal: the empty monomial generates")
    relation = squarefree_ambient(sq.n, exponent)
    gens = [_gen_cid(relation, g) for g in sq.generators]
    return ideal_from_generators(relation, gens)


@dataclass
class LinearityReport:
    verdict: bool
    witness: object = None  # (monomial, (i, j)) of the first failure
    note: str = FINITE_RESTRICTION_NOTE


def is_componentwise_linear(sq, field):
    """Sequential acyclicity of every restricted open interval below a
    squarefree class of the bridged right ideal."""
    ideal = bridge_ideal(sq)
    report = is_koszul_ideal(ideal, field)
    witness = None
    if not report.verdict:
        name, detail = report.witness
        # translate the class name back to a monomial
        relation = ideal.relation
        for cid in ideal.sorted_cids():
            if relation.class_name(cid) == name:
                witness = (monomial_name(_class_exponents(relation, cid)),
                           detail)
                break
    return LinearityReport(report.verdict, witness)


@dataclass
class EhhrwReport:
    generators: tuple
    componentwise_linear: bool
    cwl_witness: object
    dual_facets: tuple
    dual_seq_cm: bool
    dual_pure: bool
    dual_cm: object  # bool when pure, None otherwise
    agreement: bool
    note: str = FINITE_RESTRICTION_NOTE


def ehhrw_crosscheck(cx, field, n=None):
    """Both sides of the duality: componentwise linearity of the ideal of
    the complex, and sequential Cohen-Macaulayness of its Alexander dual,
    computed independently; when the dual is pure, plain Cohen-Macaulayness
    must give the same answer again."""
    sq = ideal_of_complex(cx, n)
    if sq.is_zero:
        raise PreconditionError("zero ideal: the complex is the full simplex")
    lin = is_componentwise_linear(sq, field)
    dual = cx.alexander_dual()
    seq_cm, _ = is_seq_cm(dual, field)
    pure = (not dual.void) and dual.is_pure()
    cm = None
    if pure:
        cm, _ = is_cm(dual, field)
    agreement = (lin.verdict == seq_cm) and (cm is None or cm == seq_cm)
    if dual.void:
        dual_facets = ("VOID",)
    else:
        dual_facets = tuple(
            " ".join(str(v) for v in sorted(f)) if f else "EMPTY"
            for f in dual.facets)
    names = tuple(
        monomial_name(tuple(1 if i + 1 in g else 0 for i in range(sq.n)))
        for g in sq.generators)
    return EhhrwReport(names, lin.verdict, lin.witness, dual_facets,
                       seq_cm, pure, cm, agreement)


# -- test support: the two structural facts behind the squarefree restriction


def case1_complexes(cx, F):
    """For a face F of the dual of the given complex: the restricted-interval
    order complex of the squarefree class supported off F, paired with the
    barycentric subdivision of the dual link at F.  The two are simplicially
    isomorphic via z -> (complement of supp z) minus F; callers compare face
    counts and homology."""
    n = len(cx.universe)
    sq = ideal_of_complex(cx, n)
    ideal = bridge_ideal(sq)
    relation = ideal.relation
    F = frozenset(F)
    supp = tuple(0 if i + 1 in F else 1 for i in range(n))
    bottom = ",".join(["0"] * n)
    top = ",".join(str(v) for v in supp)
    cid = relation.cid_of(bottom, top)
    if cid not in ideal.cids:
        raise PreconditionError(
            f"{monomial_name(supp)} is not in the bridged ideal")
    restricted = restricted_complex(ideal, cid)
    dual = cx.alexander_dual()
    link = dual.link(F)
    return restricted, link.barycentric_subdivision()


def case2_nonsquarefree_layers(cx, field, n=None):
    """In the exponent-2 ambient, every sequential layer of the restricted
    interval below a non-squarefree ideal class must have vanishing reduced
    homology in every degree.  Returns (ok, witness)."""
    sq = ideal_of_complex(cx, n)
    ideal = bridge_ideal(sq, exponent=2)
    relation = ideal.relation
    for cid in ideal.sorted_cids():
        exps = _class_exponents(relation, cid)
        if max(exps) < 2:
            continue
        rc = restricted_complex(ideal, cid)
        if rc.void:
            continue
        for j in range(0, rc.dim + 1):
            layer = rc.sequential_layer(j)
            if layer.void:
                continue
            h = reduced_homology(layer, field)
            if h:
                return False, (monomial_name(exps), j, h)
    return True, None
