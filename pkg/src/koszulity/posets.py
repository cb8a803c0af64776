"""Finite posets with opaque string identifiers.

Order data is a dense boolean matrix built by transitive closure at
construction; longest-chain lengths are computed once on demand.  Elements are
referred to by identifier in the public API and by integer index internally.
"""

from __future__ import annotations

from .complexes import SimplicialComplex


class PosetError(ValueError):
    pass


class Poset:
    def __init__(self, elements, leq_rows, coords=None):
        # leq_rows[i] = frozenset of indices j with element i <= element j
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise PosetError("duplicate element identifier")
        self._up = tuple(frozenset(r) for r in leq_rows)
        self.coords = dict(coords) if coords else None
        self._covers = None
        self._length = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_covers(cls, elements, covers, coords=None):
        """Build from cover pairs (lo, hi); reflexive-transitive closure.

        Rejects unknown identifiers and cycles.
        """
        elements = tuple(elements)
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise PosetError("duplicate element identifier")
        n = len(elements)
        succ = [set() for _ in range(n)]
        for lo, hi in covers:
            if lo not in index:
                raise PosetError(f"unknown element in cover: {lo!r}")
            if hi not in index:
                raise PosetError(f"unknown element in cover: {hi!r}")
            if lo == hi:
                raise PosetError(f"cover relates {lo!r} to itself")
            succ[index[lo]].add(index[hi])
        up = [set([i]) for i in range(n)]
        # closure by DFS from each node, with cycle rejection
        order = _toposort(succ)  # raises on cycle
        for i in reversed(order):
            for j in succ[i]:
                up[i] |= up[j]
        return cls(elements, up, coords)

    # -- basic queries -------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.elements == other.elements
            and self._up == other._up
        )

    def __hash__(self):
        return hash((self.elements, self._up))

    def __repr__(self):
        return f"Poset({len(self.elements)} elements)"

    def index(self, x):
        try:
            return self._index[x]
        except KeyError:
            raise PosetError(f"unknown element {x!r}") from None

    def leq(self, x, y):
        return self.index(y) in self._up[self.index(x)]

    def leq_idx(self, i, j):
        return j in self._up[i]

    def up_idx(self, i):
        return self._up[i]

    @property
    def covers(self):
        """Cover pairs (lo, hi) as identifiers, in index order."""
        if self._covers is None:
            out = []
            for i in range(len(self.elements)):
                above = self._up[i] - {i}
                for j in sorted(above):
                    if not any(k in self._up[i] and j in self._up[k]
                               for k in above if k != j):
                        out.append((self.elements[i], self.elements[j]))
            self._covers = tuple(out)
        return self._covers

    def comparable_pairs(self):
        """All (i, j) index pairs with i <= j, lexicographic."""
        for i in range(len(self.elements)):
            for j in sorted(self._up[i]):
                yield (i, j)

    # -- lengths ---------------------------------------------------------

    def _length_matrix(self):
        # length[i][j] = longest chain step count from i to j (-1 if not i<=j)
        if self._length is None:
            n = len(self.elements)
            succ = [[] for _ in range(n)]
            for lo, hi in self.covers:
                succ[self._index[lo]].append(self._index[hi])
            length = [[-1] * n for _ in range(n)]
            order = _toposort([set(s) for s in succ])
            for i in reversed(order):
                row = length[i]
                row[i] = 0
                for j in succ[i]:
                    for k, v in enumerate(length[j]):
                        if v >= 0 and v + 1 > row[k]:
                            row[k] = v + 1
            self._length = length
        return self._length

    def interval_length(self, x, y):
        """Longest chain length in [x, y] (count of covers along the chain)."""
        i, j = self.index(x), self.index(y)
        v = self._length_matrix()[i][j]
        if v < 0:
            raise PosetError(f"not comparable: {x!r} <= {y!r} fails")
        return v

    def length_idx(self, i, j):
        return self._length_matrix()[i][j]

    # -- derived posets ----------------------------------------------------

    def restrict(self, keep_ids):
        """Induced subposet on the given identifiers, preserving their order."""
        keep = [e for e in self.elements if e in set(keep_ids)]
        idx = [self._index[e] for e in keep]
        pos = {g: a for a, g in enumerate(idx)}
        rows = [frozenset(pos[j] for j in self._up[g] if j in pos) for g in idx]
        coords = None
        if self.coords:
            coords = {e: self.coords[e] for e in keep if e in self.coords}
        return Poset(keep, rows, coords)

    def open_interval(self, x, y):
        i, j = self.index(x), self.index(y)
        if not self.leq_idx(i, j):
            raise PosetError(f"not comparable: {x!r} <= {y!r} fails")
        mids = [e for k, e in enumerate(self.elements)
                if k != i and k != j and self.leq_idx(i, k) and self.leq_idx(k, j)]
        return self.restrict(mids)

    def closed_interval(self, x, y):
        i, j = self.index(x), self.index(y)
        if not self.leq_idx(i, j):
            raise PosetError(f"not comparable: {x!r} <= {y!r} fails")
        mids = [e for k, e in enumerate(self.elements)
                if self.leq_idx(i, k) and self.leq_idx(k, j)]
        return self.restrict(mids)

    def bounded_extension(self, bottom="_bot", top="_top"):
        """Adjoin a new minimum and maximum (identifiers must be fresh)."""
        if bottom in self._index or top in self._index:
            raise PosetError("bound identifier already present")
        n = len(self.elements)
        elements = (bottom,) + self.elements + (top,)
        rows = [frozenset(range(n + 2))]
        for i in range(n):
            rows.append(frozenset({j + 1 for j in self._up[i]} | {n + 1}))
        rows.append(frozenset({n + 1}))
        return Poset(elements, rows)

    # -- chains / complexes ----------------------------------------------

    def order_complex(self):
        """Complex of chains; facets are the maximal chains.

        The empty poset yields the void complex.
        """
        n = len(self.elements)
        if n == 0:
            return SimplicialComplex.void_complex(())
        succ = [[] for _ in range(n)]
        for lo, hi in self.covers:
            succ[self._index[lo]].append(self._index[hi])
        minimal = [i for i in range(n)
                   if not any(i in succ[k] for k in range(n))]
        facets = []

        def grow(chain, i):
            nxt = succ[i]
            if not nxt:
                facets.append(frozenset(self.elements[k] for k in chain))
                return
            for j in nxt:
                grow(chain + [j], j)

        for i in minimal:
            grow([i], i)
        return SimplicialComplex.from_faces(self.elements, facets)

    def maximal_chains_between(self, x, y):
        """All maximal chains of [x, y], as tuples of identifiers."""
        i, j = self.index(x), self.index(y)
        if not self.leq_idx(i, j):
            raise PosetError(f"not comparable: {x!r} <= {y!r} fails")
        interval = {k for k in self._up[i] if self.leq_idx(k, j)}
        succ = {k: sorted(m for m in interval
                          if m != k and self.leq_idx(k, m)
                          and not any(m2 in interval and m2 != k and m2 != m
                                      and self.leq_idx(k, m2) and self.leq_idx(m2, m)
                                      for m2 in interval))
                for k in interval}
        chains = []

        def walk(chain, k):
            if k == j:
                chains.append(tuple(self.elements[c] for c in chain))
                return
            for m in succ[k]:
                walk(chain + [m], m)

        walk([i], i)
        return chains

    def is_graded(self):
        """True when every closed interval has all maximal chains equal length.

        Returns (flag, witness): witness is the lex-least offending (x, y) pair
        of identifiers, or None.
        """
        for i, j in self.comparable_pairs():
            x, y = self.elements[i], self.elements[j]
            lengths = {len(c) for c in self.maximal_chains_between(x, y)}
            if len(lengths) > 1:
                return False, (x, y)
        return True, None


def _toposort(succ):
    n = len(succ)
    state = [0] * n  # 0 new, 1 active, 2 done
    out = []

    def visit(i):
        stack = [(i, iter(succ[i]))]
        state[i] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for j in it:
                if state[j] == 1:
                    raise PosetError("cover relation has a cycle")
                if state[j] == 0:
                    state[j] = 1
                    stack.append((j, iter(succ[j])))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                out.append(node)
                stack.pop()

    for i in range(n):
        if state[i] == 0:
            visit(i)
    out.reverse()
    return out
