"""Finite abstract simplicial complexes.

Two degenerate complexes are kept distinct throughout: the void complex (no
faces at all, encoded by a flag) and the empty-face complex {∅} (exactly one
face, the empty one, encoded as a single empty facet).  The distinction
matters: {∅} has reduced homology k in degree -1, the void complex has none.
"""

from __future__ import annotations

import itertools
from math import comb


class ComplexError(ValueError):
    pass


class SimplicialComplex:
    def __init__(self, universe, facets, void):
        self.universe = tuple(universe)
        self._uindex = {v: i for i, v in enumerate(self.universe)}
        if len(self._uindex) != len(self.universe):
            raise ComplexError("duplicate vertex in universe")
        if void and facets:
            raise ComplexError("void complex cannot have facets")
        key = lambda f: tuple(sorted(self._uindex[v] for v in f))
        self.facets = tuple(sorted((frozenset(f) for f in facets), key=key))
        self.void = void
        self._faces = None

    # -- constructors ---------------------------------------------------

    @classmethod
    def void_complex(cls, universe=()):
        return cls(universe, (), True)

    @classmethod
    def empty_face_complex(cls, universe=()):
        return cls(universe, (frozenset(),), False)

    @classmethod
    def from_faces(cls, universe, faces):
        """Prunes to maximal faces.  No faces at all gives the void complex."""
        faces = [frozenset(f) for f in faces]
        for f in faces:
            for v in f:
                if v not in universe:
                    raise ComplexError(f"vertex {v!r} outside universe")
        if not faces:
            return cls.void_complex(universe)
        maximal = [f for f in faces
                   if not any(f < g for g in faces)]
        # dedupe
        seen, out = set(), []
        for f in maximal:
            if f not in seen:
                seen.add(f)
                out.append(f)
        return cls(universe, out, False)

    # -- basics ----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.void == other.void
                and set(self.facets) == set(other.facets))

    def __hash__(self):
        return hash((self.void, frozenset(self.facets)))

    def __repr__(self):
        if self.void:
            return "SimplicialComplex(void)"
        return f"SimplicialComplex({len(self.facets)} facets, dim {self.dim})"

    @property
    def dim(self):
        if self.void:
            raise ComplexError("void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def faces(self):
        """Frozenset of all faces (includes the empty face when nonvoid)."""
        if self._faces is None:
            out = set()
            if not self.void:
                out.add(frozenset())
                for f in self.facets:
                    fl = list(f)
                    for r in range(1, len(fl) + 1):
                        out.update(frozenset(c)
                                   for c in itertools.combinations(fl, r))
            self._faces = frozenset(out)
        return self._faces

    def faces_by_dim(self):
        """dict: dimension -> faces of that dimension, canonically sorted."""
        key = lambda f: tuple(sorted(self._uindex[v] for v in f))
        out = {}
        for f in self.faces():
            out.setdefault(len(f) - 1, []).append(f)
        for d in out:
            out[d].sort(key=key)
        return out

    def has_face(self, f):
        f = frozenset(f)
        return not self.void and any(f <= g for g in self.facets)

    def face_key(self, f):
        return tuple(sorted(self._uindex[v] for v in f))

    def vertex_key(self, v):
        return self._uindex[v]

    # -- layers ------------------------------------------------------------

    def sequential_layer(self, j):
        """Subcomplex generated by all faces of dimension >= j.

        Void input (or j above the dimension) gives the void complex.
        """
        if self.void:
            return SimplicialComplex.void_complex(self.universe)
        keep = [f for f in self.facets if len(f) - 1 >= j]
        if not keep:
            return SimplicialComplex.void_complex(self.universe)
        return SimplicialComplex(self.universe, keep, False)

    def pure_skeleton(self, d):
        """Subcomplex generated by the faces of dimension exactly d."""
        if self.void:
            return SimplicialComplex.void_complex(self.universe)
        dfaces = [f for f in self.faces() if len(f) - 1 == d]
        if not dfaces:
            return SimplicialComplex.void_complex(self.universe)
        return SimplicialComplex(self.universe, dfaces, False)

    def is_pure(self):
        return len({len(f) for f in self.facets}) <= 1

    # -- link / join ---------------------------------------------------------

    def link(self, f):
        f = frozenset(f)
        if not self.has_face(f):
            raise ComplexError(f"not a face: {sorted(map(str, f))}")
        cands = [s - f for s in self.facets if f <= s]
        maximal = [g for g in cands if not any(g < h for h in cands)]
        universe = tuple(v for v in self.universe if v not in f)
        return SimplicialComplex(universe, set(maximal), False)

    def join(self, other):
        if set(self.universe) & set(other.universe):
            raise ComplexError("join requires disjoint universes")
        universe = self.universe + other.universe
        if self.void or other.void:
            return SimplicialComplex.void_complex(universe)
        facets = [a | b for a in self.facets for b in other.facets]
        return SimplicialComplex.from_faces(universe, facets)

    # -- duality / subdivision -----------------------------------------------

    def alexander_dual(self):
        """{complement of G : G not a face}, over this complex's universe."""
        full = frozenset(self.universe)
        nonfaces = []
        for r in range(0, len(full) + 1):
            for c in itertools.combinations(self.universe, r):
                s = frozenset(c)
                if not self.has_face(s) and not any(m <= s for m in nonfaces):
                    nonfaces.append(s)
        if not nonfaces:
            return SimplicialComplex.void_complex(self.universe)
        return SimplicialComplex.from_faces(
            self.universe, [full - m for m in nonfaces])

    def barycentric_subdivision(self):
        """Order complex of the poset of nonempty faces.

        Homology (layers included) is preserved; in particular bs({∅}) = {∅}
        and bs(void) = void.
        """
        if self.void:
            return SimplicialComplex.void_complex(())
        verts = sorted((f for f in self.faces() if f),
                       key=lambda f: (len(f), self.face_key(f)))
        if not verts:
            return SimplicialComplex.empty_face_complex(())
        flags = []
        for s in self.facets:
            items = sorted(s, key=lambda v: self._uindex[v])
            for perm in itertools.permutations(items):
                flags.append(frozenset(
                    frozenset(perm[:k]) for k in range(1, len(perm) + 1)))
        return SimplicialComplex.from_faces(tuple(verts), flags)

    # -- counting --------------------------------------------------------------

    def f_vector(self):
        """(f_{-1}, f_0, ..., f_dim); errors on the void complex."""
        if self.void:
            raise ComplexError("f-vector of the void complex")
        counts = [0] * (self.dim + 2)
        for f in self.faces():
            counts[len(f)] += 1
        return tuple(counts)

    def h_vector(self):
        f = self.f_vector()
        d = self.dim + 1
        return tuple(
            sum((-1) ** (j - k) * comb(d - k, j - k) * f[k]
                for k in range(0, j + 1))
            for j in range(0, d + 1))

    def fh_triangle(self):
        """(f, h) triangles as nested lists indexed [i][j], 0 <= j <= i <= d.

        f[i][j] counts faces with j vertices whose largest containing facet
        has i vertices; the empty face is attributed to i = d (the maximum
        facet cardinality).  h is the usual alternating-binomial transform of
        each row.
        """
        if self.void:
            raise ComplexError("fh-triangle of the void complex")
        d = self.dim + 1
        f = [[0] * (i + 1) for i in range(d + 1)]
        for face in self.faces():
            i = max(len(s) for s in self.facets if face <= s)
            f[i][len(face)] += 1
        h = [[sum((-1) ** (j - k) * comb(i - k, j - k) * f[i][k]
                  for k in range(0, j + 1))
              for j in range(i + 1)]
             for i in range(d + 1)]
        return f, h
