"""k-subspaces of K = k[x]/(m) and the scaling-equivalence test between them.

A subspace is stored as the reduced row-echelon basis of its coordinate
vectors, which makes equal subspaces literally equal objects.  Two subspaces
W1, W2 are *projectively equivalent* when beta*W1 = W2 for a nonzero beta in
K; graded rank-one summands of a Frobenius pushforward are isomorphic up to
shift exactly when their coefficient spaces are equivalent in this sense.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import linalg
from .errors import FieldMismatch, ZeroSubspace
from .fields import ExtElement, ExtField


@dataclass(frozen=True)
class Subspace:
    parent: ExtField
    rows: tuple = ()
    pivots: tuple = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    @property
    def is_full(self) -> bool:
        return self.dim == self.parent.n

    def basis(self) -> list[ExtElement]:
        return [ExtElement(self.parent, tuple(r)) for r in self.rows]

    def contains(self, x: ExtElement) -> bool:
        if x.field != self.parent:
            raise FieldMismatch("element and subspace live in different fields")
        vec = list(x.coords)
        for row, pc in zip(self.rows, self.pivots):
            c = vec[pc]
            if c:
                vec = [a - c * b if b else a for a, b in zip(vec, row)]
        return not any(vec)

    def contains_space(self, other: Subspace) -> bool:
        return all(self.contains(w) for w in other.basis())

    def key(self):
        return tuple(tuple(c.key() for c in row) for row in self.rows)

    def to_json(self) -> dict:
        K = self.parent
        return {"dim": self.dim, "basis": [[K.base.to_json(c) for c in row] for row in self.rows]}

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={self.basis()})"


def _from_rows(K: ExtField, rows) -> Subspace:
    red, pivots = linalg.rref(rows, K.base)
    return Subspace(K, tuple(tuple(r) for r in red), tuple(pivots))


def zero_space(K: ExtField) -> Subspace:
    return Subspace(K, (), ())


def full_space(K: ExtField) -> Subspace:
    return span([K.basis_vector(j) for j in range(K.n)], K)


def span(vectors: Iterable[ExtElement], parent: ExtField | None = None) -> Subspace:
    vectors = list(vectors)
    if parent is None:
        if not vectors:
            raise ValueError("span of no vectors needs an explicit parent field")
        parent = vectors[0].field
    for v in vectors:
        if v.field != parent:
            raise FieldMismatch("span over vectors from different fields")
    return _from_rows(parent, [v.coords for v in vectors if v])


def from_json(K: ExtField, obj: dict) -> Subspace:
    rows = [[K.base.from_json(c) for c in row] for row in obj["basis"]]
    return _from_rows(K, rows)


def scale(W: Subspace, beta: ExtElement) -> Subspace:
    return span([beta * w for w in W.basis()], W.parent)


def product_space(W1: Subspace, W2: Subspace) -> Subspace:
    """k-span of all products w1*w2."""
    _same_parent(W1, W2)
    return span([a * b for a in W1.basis() for b in W2.basis()], W1.parent)


def sum_space(W1: Subspace, W2: Subspace) -> Subspace:
    _same_parent(W1, W2)
    return span(W1.basis() + W2.basis(), W1.parent)


def root_space(W: Subspace, e: int) -> Subspace:
    """W^(1/p^e); inverse Frobenius is additive and maps k onto k, so roots of a basis span it."""
    return span([w.pth_root_iter(e) for w in W.basis()], W.parent)


def frobenius_space(W: Subspace, e: int) -> Subspace:
    """W^(p^e), the image of W under the e-th Frobenius of K."""
    return span([w.frobenius(e) for w in W.basis()], W.parent)


def _same_parent(W1: Subspace, W2: Subspace):
    if W1.parent != W2.parent:
        raise FieldMismatch("subspaces of different fields")


def _annihilator(W: Subspace) -> list[list]:
    """Rows c with <c, w> = 0 for every w in W; W is their common kernel."""
    K = W.parent
    return linalg.nullspace([list(r) for r in W.rows], K.n, K.base)


def scaling_transporter(W1: Subspace, W2: Subspace) -> Subspace:
    """T = {beta in K : beta*W1 is contained in W2}, solved as a k-linear system in beta."""
    _same_parent(W1, W2)
    K = W1.parent
    if W2.is_full or W1.is_zero:
        return full_space(K)
    ann = _annihilator(W2)
    equations = []
    for w in W1.basis():
        # column j: coordinates of a^j * w
        cols = [(K.basis_vector(j) * w).coords for j in range(K.n)]
        for c in ann:
            eq = []
            for col in cols:
                acc = K.base.zero
                for ci, xi in zip(c, col):
                    if ci and xi:
                        acc = acc + ci * xi
                eq.append(acc)
            equations.append(eq)
    sols = linalg.nullspace(equations, K.n, K.base)
    return _from_rows(K, sols)


@dataclass(frozen=True)
class Equivalence:
    """Outcome of a projective-equivalence test.

    ``witness`` is a nonzero beta with beta*W1 = W2 when equivalent.  When not
    equivalent, ``transporter`` is the certificate: it is zero, or the
    dimensions differ (``reason`` says which).
    """

    equivalent: bool
    witness: ExtElement | None
    transporter: Subspace
    reason: str

    def __bool__(self):
        return self.equivalent


def projectively_equivalent(W1: Subspace, W2: Subspace) -> Equivalence:
    _same_parent(W1, W2)
    if W1.is_zero or W2.is_zero:
        raise ZeroSubspace("projective equivalence needs nonzero subspaces")
    T = scaling_transporter(W1, W2)
    if W1.dim != W2.dim:
        return Equivalence(False, None, T, "dimension")
    if T.is_zero:
        return Equivalence(False, None, T, "zero-transporter")
    # beta*W1 inside W2 with equal dimensions forces equality
    return Equivalence(True, T.basis()[0], T, "witness")


def canonical_label(W: Subspace):
    """Least echelon basis (under element keys) over the orbit {beta*W : beta in K*}.

    Only available over a finite base; two subspaces are projectively
    equivalent iff their labels coincide.
    """
    K = W.parent
    if not K.is_finite:
        raise TypeError("canonical labels need a finite coefficient field")
    if W.is_zero:
        raise ZeroSubspace("zero subspace has no projective class")
    best = None
    for beta in K.elements():
        if not beta:
            continue
        k = scale(W, beta).key()
        if best is None or k < best:
            best = k
    return (W.dim, best)
