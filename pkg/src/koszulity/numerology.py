"""Hilbert and Poincare matrices over the point classes, the Koszul matrix
identity, and the h-triangle diagonal formula.

Polynomials are dense integer coefficient lists (index = exponent, trailing
zeros trimmed); degrees are bounded by the longest chain, so nothing fancier
is warranted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import PreconditionError, tor_topological, _require_validated
from .homology import relative_homology, is_seq_acyclic


def poly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_sub(a, b):
    return poly_add(a, [-c for c in b])


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return poly_trim(out)


def poly_flip(a):
    """Substitute -t for t."""
    return [(-c if i % 2 else c) for i, c in enumerate(a)]


def poly_str(a):
    a = poly_trim(a)
    if not a:
        return "0"
    parts = []
    for e, c in enumerate(a):
        if not c:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else str(abs(c))
            body = f"{mag}t" if e == 1 else f"{mag}t^{e}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts)


@dataclass
class PolyMatrix:
    """Square matrix of integer polynomials indexed by point classes.

    labels: display names, one per point class, in first-appearance order.
    entries[i][j]: dense coefficient list.
    """

    labels: tuple
    entries: list

    @property
    def size(self):
        return len(self.labels)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix)
                and self.labels == other.labels
                and [[poly_trim(e) for e in row] for row in self.entries]
                == [[poly_trim(e) for e in row] for row in other.entries])

    def entry_str(self, i, j):
        return poly_str(self.entries[i][j])

    def matmul(self, other):
        n = self.size
        out = [[[] for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                acc = []
                for k in range(n):
                    acc = poly_add(
                        acc, poly_mul(self.entries[i][k], other.entries[k][j]))
                out[i][j] = acc
        return PolyMatrix(self.labels, out)

    def flip_variable(self):
        return PolyMatrix(
            self.labels,
            [[poly_flip(e) for e in row] for row in self.entries])

    def minus_identity(self):
        out = [[poly_trim(e) for e in row] for row in self.entries]
        for i in range(self.size):
            out[i][i] = poly_sub(out[i][i], [1])
        return PolyMatrix(self.labels, out)

    def is_zero(self):
        return all(not poly_trim(e) for row in self.entries for e in row)

    @classmethod
    def identity(cls, labels):
        n = len(labels)
        return cls(tuple(labels),
                   [[[1] if i == j else [] for j in range(n)]
                    for i in range(n)])


def _point_class_labels(relation):
    elements = relation.poset.elements
    return tuple(str(elements[relation.classes[pc].rep[0]])
                 for pc in relation.point_classes)


def hilbert_matrix(relation):
    """Entry (x, y): the length generating polynomial of the classes from
    point class x to point class y."""
    _require_validated(relation)
    pcs = relation.point_classes
    idx = {pc: i for i, pc in enumerate(pcs)}
    n = len(pcs)
    entries = [[[] for _ in range(n)] for _ in range(n)]
    for cls in relation.classes:
        i = idx[relation.source(cls.cid)]
        j = idx[relation.target(cls.cid)]
        cur = entries[i][j]
        while len(cur) <= cls.length:
            cur.append(0)
        cur[cls.length] += 1
    return PolyMatrix(_point_class_labels(relation), entries)


def poincare_matrix(relation, field):
    """Entry (x, y): sum over homological degrees i of the total dimension
    of the i-th Tor group between the two simple modules, times t^i."""
    table = tor_topological(relation, field, "ring")
    pcs = relation.point_classes
    idx = {pc: i for i, pc in enumerate(pcs)}
    n = len(pcs)
    entries = [[[] for _ in range(n)] for _ in range(n)]
    for (s, t, i, _), dim in table.sorted_items():
        cur = entries[idx[s]][idx[t]]
        while len(cur) <= i:
            cur.append(0)
        cur[i] += dim
    return PolyMatrix(_point_class_labels(relation), entries)


def verify_koszul_identity(relation, field):
    """Multiply the Hilbert matrix by the sign-flipped Poincare matrix and
    compare with the identity.  Returns (holds, residual) where residual is
    the product minus the identity.  Meaningful as a theorem only when the
    ring is Koszul; informational otherwise."""
    P = hilbert_matrix(relation)
    Q = poincare_matrix(relation, field)
    product = P.matmul(Q.flip_variable())
    residual = product.minus_identity()
    return residual.is_zero(), residual


def h_diagonal_check(cx, field):
    """For a sequentially acyclic complex, test that each diagonal h-triangle
    entry h[i][i] equals the dimension of the degree i-1 homology of the
    consecutive-layer pair.  Raises unless the complex is sequentially
    acyclic (the equality is not asserted otherwise)."""
    ok, witness = is_seq_acyclic(cx, field)
    if not ok:
        raise PreconditionError(
            f"complex is not sequentially acyclic over {field}: {witness}")
    if cx.void:
        return True
    _, h = cx.fh_triangle()
    for i in range(cx.dim + 2):
        rel = relative_homology(cx.sequential_layer(i - 1),
                                cx.sequential_layer(i), field)
        if h[i][i] != rel.get(i - 1, 0):
            return False
    return True
