"""Koszulness, quadraticity and Tor tables for the associated graded algebra
of a reduced incidence algebra, and for monomial right ideals in it.

Two independent Tor backends:

* topological: per interval class, relative homology of consecutive
  sequential layers of the open interval's order complex (restricted to the
  ideal for the module case);
* bar: the reduced bar complex over composable class sequences, graded by
  total class length (plus the module generator's filtration degree).

Their agreement is the standing cross-check.  Conventions: a class of
length >= 1 whose (restricted) open interval is empty contributes the
empty-face complex {∅}; point classes contribute the void complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .complexes import SimplicialComplex
from .homology import relative_homology, is_seq_acyclic, is_seq_cm
from .relations import (IntervalEquivalence, RelationError,
                        InternalCheckError, restricted_subposet)


class PreconditionError(ValueError):
    pass


def _require_validated(relation):
    if not relation.validated:
        raise PreconditionError(
            "relation axioms not validated (run validate_axioms first)")


# -- products ------------------------------------------------------------------


def product(relation, a, b):
    """Class of ξ_a ξ_b in the incidence algebra, or None.

    With the axioms validated, the product is nonzero exactly when the
    target point class of a matches the source point class of b, and the
    witness arrangement is immaterial.
    """
    _require_validated(relation)
    if relation.target(a) != relation.source(b):
        return None
    for (x, y) in relation.classes[a].members:
        ext = relation.extensions(y, b)
        if ext:
            return relation.class_of[(x, ext[0])]
    return None


def gr_product(relation, a, b):
    """Product in the length-graded algebra: the incidence product when
    lengths add, else None."""
    c = product(relation, a, b)
    if c is None:
        return None
    cls = relation.classes
    if cls[c].length != cls[a].length + cls[b].length:
        return None
    return c


# -- monomial right ideals ------------------------------------------------------


@dataclass
class MonomialRightIdeal:
    relation: IntervalEquivalence
    cids: frozenset
    generators: tuple

    def __contains__(self, cid):
        return cid in self.cids

    def sorted_cids(self):
        return sorted(self.cids)


def ideal_from_generators(relation, generator_cids):
    """Right-ideal closure of the given classes; generators need length >= 1."""
    _require_validated(relation)
    gens = tuple(sorted(set(generator_cids)))
    for g in gens:
        if relation.classes[g].length < 1:
            raise PreconditionError(
                f"ideal generator {relation.class_name(g)} has length 0")
    members = set(gens)
    frontier = list(gens)
    all_cids = range(len(relation.classes))
    while frontier:
        nxt = []
        for a in frontier:
            for b in all_cids:
                c = product(relation, a, b)
                if c is not None and c not in members:
                    members.add(c)
                    nxt.append(c)
        frontier = nxt
    return MonomialRightIdeal(relation, frozenset(members), gens)


def augmentation_ideal(relation):
    """The ideal of all classes of positive length."""
    _require_validated(relation)
    cids = frozenset(c.cid for c in relation.classes if c.length >= 1)
    gens = tuple(sorted(c.cid for c in relation.classes if c.length == 1))
    return MonomialRightIdeal(relation, cids, gens)


def module_degrees(ideal):
    """Filtration degree of each ideal class: 1 + dim of the restricted open
    interval's order complex, i.e. the longest restricted chain size."""
    relation = ideal.relation
    out = {}
    for cid in ideal.sorted_cids():
        sub = restricted_subposet(relation, ideal.cids, cid)
        best = 0
        # longest chain size in the restricted open interval; elements with
        # smaller up-sets sit higher, so process them first
        order = sorted(range(len(sub)), key=lambda i: len(sub.up_idx(i)))
        longest = {}
        for i in order:
            longest[i] = 1 + max(
                (longest[j] for j in sub.up_idx(i) if j != i), default=0)
            best = max(best, longest[i])
        out[cid] = best
    return out


def module_action(relation, degs, a, b, diagnostics=None):
    """Right action of a class b on an ideal class a in the associated graded
    module.  Normative semantics: filtration degrees must add.  The
    length-additivity reading is evaluated alongside; disagreements are
    appended to diagnostics as (a, b, c) triples."""
    c = product(relation, a, b)
    if c is None:
        return None
    cls = relation.classes
    deg_ok = degs[c] == degs[a] + cls[b].length
    len_ok = cls[c].length == cls[a].length + cls[b].length
    if deg_ok != len_ok and diagnostics is not None:
        diagnostics.append((a, b, c))
    return c if deg_ok else None


# -- interval complexes ----------------------------------------------------------


def interval_complex(relation, cid):
    """Order complex of the representative's open interval.

    Point classes give the void complex; a class of positive length with an
    empty open interval gives {∅}.
    """
    cls = relation.classes[cid]
    if cls.length == 0:
        return SimplicialComplex.void_complex(())
    P = relation.poset
    x, y = cls.rep
    sub = P.open_interval(P.elements[x], P.elements[y])
    if len(sub) == 0:
        return SimplicialComplex.empty_face_complex(())
    return sub.order_complex()


def restricted_complex(ideal, cid):
    """Order complex of the ideal-restricted open interval (module case)."""
    sub = restricted_subposet(ideal.relation, ideal.cids, cid)
    if len(sub) == 0:
        return SimplicialComplex.empty_face_complex(())
    return sub.order_complex()


# -- Tor tables -------------------------------------------------------------------


@dataclass
class TorTable:
    module: str  # "ring" | "ideal"
    backend: str  # "topo" | "bar"
    field: object
    entries: dict  # (source_pc, target_pc, i, j) -> dim, nonzero only
    diagnostics: list = dc_field(default_factory=list)

    def restricted_to(self, i_max):
        return {k: v for k, v in self.entries.items() if k[2] <= i_max}

    def sorted_items(self):
        return sorted(self.entries.items())

    def off_diagonal(self):
        return {k: v for k, v in self.entries.items() if k[2] != k[3]}

    def total_by_i(self, s, t):
        out = {}
        for (a, b, i, _), v in self.entries.items():
            if a == s and b == t:
                out[i] = out.get(i, 0) + v
        return out


def tor_topological(relation, field, module="ring", ideal=None):
    """Tor table from relative layer homology of interval complexes."""
    _require_validated(relation)
    entries = {}
    if module == "ring":
        for pc in relation.point_classes:
            entries[(pc, pc, 0, 0)] = 1
        shift = 2
        work = [(cid, interval_complex(relation, cid))
                for cid in range(len(relation.classes))
                if relation.classes[cid].length >= 1]
    elif module == "ideal":
        if ideal is None:
            raise PreconditionError("module='ideal' needs an ideal")
        shift = 1
        work = [(cid, restricted_complex(ideal, cid))
                for cid in ideal.sorted_cids()]
    else:
        raise PreconditionError(f"unknown module {module!r}")
    for cid, cx in work:
        s, t = relation.source(cid), relation.target(cid)
        if cx.void:
            continue
        for layer_j in range(-1, cx.dim + 1):
            h = relative_homology(cx.sequential_layer(layer_j),
                                  cx.sequential_layer(layer_j + 1), field)
            for deg, dim in h.items():
                key = (s, t, deg + shift, layer_j + shift)
                entries[key] = entries.get(key, 0) + dim
    return TorTable(module, "topo", field, entries)


def _compose_sequences(relation, start_pc, lmax, min_len=1):
    """All composable class tuples with every class length >= min_len,
    total length <= lmax, starting at the given source point class.
    Yields (tuple, total_length, target_pc)."""
    pos_classes = {}
    for c in relation.classes:
        if c.length >= min_len:
            pos_classes.setdefault(relation.source(c.cid), []).append(c.cid)

    def extend(seq, total, at):
        yield seq, total, at
        for nxt in pos_classes.get(at, ()):
            ln = relation.classes[nxt].length
            if total + ln <= lmax:
                yield from extend(seq + (nxt,), total + ln,
                                  relation.target(nxt))

    yield from extend((), 0, start_pc)


def tor_bar_oracle(relation, field, module="ring", ideal=None, i_max=None,
                   j_max=None):
    """Independent Tor computation from the reduced bar complex.

    Basis in homological degree i: composable tuples of positive-length
    classes (prefixed by an ideal class for the module case), graded by total
    length (plus the ideal class's filtration degree).  The differential
    merges adjacent tensor factors with the graded product; the module case
    adds the leading action merge.

    The default j_max is where the layer-homology backend provably runs out
    (max class length for the ring, max filtration degree for an ideal), so
    a plain comparison of entry dicts is already a full cross-check.
    """
    from .linalg import rank

    _require_validated(relation)
    if i_max is None:
        i_max = len(relation.poset)
    diagnostics = []
    degs = module_degrees(ideal) if module == "ideal" else None
    if j_max is None:
        if module == "ring":
            j_max = max((c.length for c in relation.classes), default=0)
        else:
            j_max = max(degs.values(), default=0)
    entries = {}

    for s_pc in relation.point_classes:
        # bases[(tuple_length, j, t_pc)] -> sorted list of basis tuples
        bases = {}
        if module == "ring":
            for seq, total, at in _compose_sequences(relation, s_pc, j_max):
                if len(seq) <= i_max + 1:
                    bases.setdefault((len(seq), total, at), []).append(seq)
        elif module == "ideal":
            heads = [cid for cid in ideal.sorted_cids()
                     if relation.source(cid) == s_pc]
            for head in heads:
                budget = j_max - degs[head]
                if budget < 0:
                    continue
                for seq, total, at in _compose_sequences(
                        relation, relation.target(head), budget):
                    if len(seq) <= i_max + 1:
                        key = (len(seq) + 1, degs[head] + total, at)
                        bases.setdefault(key, []).append((head,) + seq)
        else:
            raise PreconditionError(f"unknown module {module!r}")
        for key in bases:
            bases[key].sort()

        def differential(tl, j, t_pc):
            """Columns of the boundary map out of tuple length tl, within
            internal degree j and target point class t_pc."""
            lower = {tup: r for r, tup in
                     enumerate(bases.get((tl - 1, j, t_pc), ()))}
            cols = []
            for tup in bases.get((tl, j, t_pc), ()):
                col = {}

                def add(target, coeff):
                    r = lower.get(target)
                    if r is not None:
                        col[r] = col.get(r, 0) + coeff

                if module == "ring":
                    for pos in range(1, tl):
                        m = gr_product(relation, tup[pos - 1], tup[pos])
                        if m is not None:
                            add(tup[:pos - 1] + (m,) + tup[pos + 1:],
                                (-1) ** pos)
                else:
                    # leading merge through the module action, sign +1
                    if tl >= 2:
                        m = module_action(relation, degs, tup[0], tup[1],
                                          diagnostics)
                        if m is not None:
                            add((m,) + tup[2:], 1)
                    for pos in range(2, tl):
                        m = gr_product(relation, tup[pos - 1], tup[pos])
                        if m is not None:
                            add(tup[:pos - 1] + (m,) + tup[pos + 1:],
                                (-1) ** (pos - 1))
                cols.append({r: c for r, c in col.items() if c})
            return cols

        keys = sorted(bases)
        head_len = 0 if module == "ring" else 1
        for t_pc in {k[2] for k in keys}:
            js = sorted({k[1] for k in keys if k[2] == t_pc})
            for j in js:
                ranks = {}
                for i in range(0, i_max + 2):
                    tl = i + head_len
                    if (tl, j, t_pc) in bases:
                        ranks[i] = rank(differential(tl, j, t_pc), field)
                for i in range(0, i_max + 1):
                    n = len(bases.get((i + head_len, j, t_pc), ()))
                    if not n:
                        continue
                    betti = n - ranks.get(i, 0) - ranks.get(i + 1, 0)
                    if betti:
                        entries[(s_pc, t_pc, i, j)] = betti
    return TorTable(module, "bar", field, entries, diagnostics)


# -- verdicts --------------------------------------------------------------------


@dataclass
class KoszulReport:
    verdict: bool
    module: str
    field: object
    witness: object = None  # (class name, detail...) on failure
    diagnostics: list = dc_field(default_factory=list)


def is_koszul_ring(relation, field):
    """Ring Koszulness: every open interval sequentially Cohen-Macaulay.

    Cross-checked against diagonal concentration of the topological Tor
    table; disagreement raises InternalCheckError.
    """
    _require_validated(relation)
    verdict, witness = True, None
    for cid in range(len(relation.classes)):
        if relation.classes[cid].length < 2:
            continue
        cx = interval_complex(relation, cid)
        ok, w = is_seq_cm(cx, field)
        if not ok:
            verdict, witness = False, (relation.class_name(cid), w)
            break
    table = tor_topological(relation, field, "ring")
    concentrated = not table.off_diagonal()
    if concentrated != verdict:
        raise InternalCheckError(
            "sequential-CM sweep and Tor concentration disagree "
            f"({verdict} vs {concentrated})")
    return KoszulReport(verdict, "ring", field, witness)


def is_koszul_ideal(ideal, field):
    """Ideal Koszulness: every restricted open interval sequentially acyclic."""
    relation = ideal.relation
    _require_validated(relation)
    if not ideal.cids:
        raise PreconditionError("empty ideal")
    for cid in ideal.sorted_cids():
        cx = restricted_complex(ideal, cid)
        ok, w = is_seq_acyclic(cx, field)
        if not ok:
            return KoszulReport(False, "ideal", field,
                                (relation.class_name(cid), w))
    return KoszulReport(True, "ideal", field)


def is_sgc(cx):
    """Sequentially gallery-connected: any two faces of the same dimension
    are linked by steps through codimension-one overlaps.  Dimension-0 faces
    overlap in the empty face, so that level is always connected."""
    if cx.void:
        return True
    by_dim = {}
    for f in cx.faces():
        if f:
            by_dim.setdefault(len(f), []).append(f)
    for size, faces in by_dim.items():
        if len(faces) < 2 or size == 1:
            continue
        seen = {faces[0]}
        frontier = [faces[0]]
        while frontier:
            cur = frontier.pop()
            for g in faces:
                if g not in seen and len(cur & g) == size - 1:
                    seen.add(g)
                    frontier.append(g)
        if len(seen) != len(faces):
            return False
    return True


@dataclass
class QuadraticReport:
    verdict: bool
    witness: object = None  # class name of a non-SGC interval
    tor2_mass: dict = dc_field(default_factory=dict)  # (s,t,j) -> dim, j != 2


def is_quadratic(relation):
    """Quadraticity of the graded ring: every open interval's order complex
    is sequentially gallery-connected.  Field-free (the cross-check, degree-2
    concentration of Tor_2, involves only zeroth relative homology, whose
    dimension does not depend on the field)."""
    from .linalg import Field

    _require_validated(relation)
    verdict, witness = True, None
    for cid in range(len(relation.classes)):
        if relation.classes[cid].length < 2:
            continue
        if not is_sgc(interval_complex(relation, cid)):
            verdict, witness = False, relation.class_name(cid)
            break
    table = tor_topological(relation, Field(None), "ring")
    mass = {(s, t, j): v for (s, t, i, j), v in table.entries.items()
            if i == 2 and j != 2}
    if verdict != (not mass):
        raise InternalCheckError(
            "gallery criterion and Tor_2 concentration disagree "
            f"({verdict} vs {not mass})")
    return QuadraticReport(verdict, witness, mass)
