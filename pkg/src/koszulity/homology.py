"""Reduced and relative simplicial homology with exact coefficients.

Chain complexes are augmented: the empty face is a legitimate basis element
in degree -1, so the complex {∅} has reduced homology k there and the void
complex has none anywhere.  Relative chains of a pair (Δ, Γ) are spanned by
the faces of Δ not in Γ.

Betti profiles are plain dicts {degree: dimension} with zero entries omitted.
"""

from __future__ import annotations

from .complexes import SimplicialComplex, ComplexError
from .linalg import rank


def _pair_chain_basis(cx, sub):
    """dict: dim -> canonically sorted faces of cx not in sub."""
    skip = sub.faces() if not sub.void else frozenset()
    out = {}
    for f in cx.faces():
        if f not in skip:
            out.setdefault(len(f) - 1, []).append(f)
    for d in out:
        out[d].sort(key=cx.face_key)
    return out


def pair_chain_dims(cx, sub):
    """Dimensions of the relative chain groups, as {degree: dim}."""
    if cx.void:
        return {}
    return {d: len(fs) for d, fs in _pair_chain_basis(cx, sub).items()}


def _boundary_columns(cx, basis, d):
    """Columns of the boundary map from degree d to degree d-1."""
    rows = {f: i for i, f in enumerate(basis.get(d - 1, ()))}
    cols = []
    for f in basis.get(d, ()):
        verts = sorted(f, key=cx.vertex_key)
        col = {}
        for k, v in enumerate(verts):
            g = f - {v}
            r = rows.get(g)
            if r is not None:
                col[r] = 1 if k % 2 == 0 else -1
        cols.append(col)
    return cols


def relative_homology(cx, sub, field):
    """Reduced homology of the pair (cx, sub) over the field.

    sub must be a subcomplex of cx (the void complex counts); passing the
    void complex computes absolute reduced homology.
    """
    if not sub.void:
        for f in sub.facets:
            if not cx.has_face(f):
                raise ComplexError("second complex is not a subcomplex")
    if cx.void:
        return {}
    basis = _pair_chain_basis(cx, sub)
    if not basis:
        return {}
    dims = sorted(basis)
    ranks = {}
    for d in dims:
        ranks[d] = rank(_boundary_columns(cx, basis, d), field)
    out = {}
    for d in dims:
        betti = len(basis[d]) - ranks[d] - ranks.get(d + 1, 0)
        if betti:
            out[d] = betti
    return out


def reduced_homology(cx, field):
    return relative_homology(cx, SimplicialComplex.void_complex(), field)


def is_acyclic(cx, field):
    """All reduced homology vanishes (true for the void complex)."""
    return not reduced_homology(cx, field)


def is_cm(cx, field):
    """Cohen-Macaulay: every face's link has no reduced homology below its
    dimension.  Returns (flag, witness) with witness (face, degree) or None."""
    if cx.void:
        return True, None
    for f in sorted(cx.faces(), key=cx.face_key):
        lk = cx.link(f)
        h = reduced_homology(lk, field)
        bad = [d for d in sorted(h) if d < lk.dim]
        if bad:
            return False, (f, bad[0])
    return True, None


def is_seq_acyclic(cx, field):
    """Sequentially acyclic: H̃_i of the j-th layer vanishes for i < j <= dim.

    Returns (flag, witness); witness is (i, j) for the first failure, scanning
    j upward then i upward.
    """
    if cx.void:
        return True, None
    for j in range(0, cx.dim + 1):
        layer = cx.sequential_layer(j)
        h = reduced_homology(layer, field)
        bad = [i for i in sorted(h) if i < j]
        if bad:
            return False, (bad[0], j)
    return True, None


def is_seq_acyclic_relative(cx, field):
    """Same predicate through the relative reformulation:
    H̃_i(layer j, layer j+1) = 0 for all -1 <= i < j."""
    if cx.void:
        return True, None
    for j in range(0, cx.dim + 1):
        h = relative_homology(cx.sequential_layer(j),
                              cx.sequential_layer(j + 1), field)
        bad = [i for i in sorted(h) if i < j]
        if bad:
            return False, (bad[0], j)
    return True, None


def is_seq_cm(cx, field):
    """Sequentially Cohen-Macaulay: every link is sequentially acyclic.

    Returns (flag, witness) with witness (face, i, j) or None.
    """
    if cx.void:
        return True, None
    for f in sorted(cx.faces(), key=cx.face_key):
        ok, w = is_seq_acyclic(cx.link(f), field)
        if not ok:
            return False, (f, w[0], w[1])
    return True, None
