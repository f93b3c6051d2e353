"""
Self-Dual Codes - Linear Algebra Service
=========================================
Exact dense linear algebra over GF(q) on ``galois`` arrays: canonical
subspaces, kernels, sums and intersections, orthogonal complements under
symmetric Gram matrices, and restriction of forms to subspaces.

Vectors are rows. A matrix M acts on a row vector v as v @ M.
"""

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from exceptions import DimensionMismatch, ValidationError

logger = logging.getLogger(__name__)


def rref(M):
    """Reduced row-echelon form of ``M`` (same shape) and its rank."""
    GF = type(M)
    if M.shape[0] == 0 or M.shape[1] == 0:
        return GF.Zeros(M.shape), 0
    R = M.row_reduce()
    return R, int(np.count_nonzero(np.any(R != 0, axis=1)))


def kron(A, B):
    """Kronecker product of two field matrices."""
    a, b = A.shape
    c, d = B.shape
    return (A[:, None, :, None] * B[None, :, None, :]).reshape(a * c, b * d)


class Subspace:
    """A row space of GF(q)^n held in reduced row-echelon form.

    The basis is canonical, so two subspaces are equal exactly when their
    basis matrices are equal.
    """

    def __init__(self, basis, n=None):
        self.basis = basis
        self.n = basis.shape[1] if n is None else n

    @classmethod
    def span(cls, GF, rows, n):
        rows = GF(rows) if not isinstance(rows, GF) else rows
        rows = rows.reshape(-1, n)
        R, rank = rref(rows)
        return cls(R[:rank], n)

    @classmethod
    def zero(cls, GF, n):
        return cls(GF.Zeros((0, n)), n)

    @classmethod
    def full(cls, GF, n):
        return cls(GF.Identity(n), n)

    @property
    def GF(self):
        return type(self.basis)

    @property
    def dim(self):
        return self.basis.shape[0]

    @cached_property
    def pivots(self):
        if self.dim == 0:
            return np.zeros(0, dtype=np.int64)
        return np.argmax(self.basis != 0, axis=1)

    def coordinates(self, vectors):
        """Coordinates of row vectors lying in this subspace, relative to ``basis``."""
        return vectors[..., self.pivots]

    def contains_vectors(self, vectors):
        vectors = vectors.reshape(-1, self.n)
        if self.dim == 0:
            return not np.any(vectors != 0)
        residue = vectors - self.coordinates(vectors) @ self.basis
        return not np.any(residue != 0)

    def contains(self, other):
        _check_ambient(self, other)
        return self.contains_vectors(other.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.GF is other.GF
                and self.n == other.n and np.array_equal(self.basis, other.basis))

    def __hash__(self):
        return hash((self.GF.order, self.n, self.basis.view(np.ndarray).tobytes()))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.dim, tuple(int(x) for x in self.basis.ravel()))

    def __repr__(self):
        return f'Subspace(dim={self.dim}, n={self.n}, field={self.GF.name})'


@dataclass(frozen=True, eq=False)
class SymForm:
    """A symmetric bilinear form given by its Gram matrix."""
    gram: object

    def __post_init__(self):
        g = self.gram
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise DimensionMismatch(f'Gram matrix of shape {g.shape} is not square')
        if not np.array_equal(g, g.T):
            raise ValidationError('Gram matrix is not symmetric', rule='symmetric-form')

    @classmethod
    def standard(cls, GF, n):
        return cls(GF.Identity(n))

    @property
    def n(self):
        return self.gram.shape[0]

    @property
    def is_standard(self):
        return np.array_equal(self.gram, type(self.gram).Identity(self.n))

    def pair(self, u, v):
        return u @ self.gram @ v.T


@dataclass(frozen=True, eq=False)
class RestrictedForm:
    """A form restricted to the coordinates of a subspace."""
    gram: object
    radical: Subspace
    kind: str


def kernel(M):
    """{x : M x = 0} as a Subspace of GF(q)^cols."""
    GF = type(M)
    cols = M.shape[1]
    if M.shape[0] == 0:
        return Subspace.full(GF, cols)
    N = M.null_space()
    if N.shape[0] == 0:
        return Subspace.zero(GF, cols)
    return Subspace.span(GF, N, cols)


def left_kernel(M):
    """{x : x M = 0} as a Subspace of GF(q)^rows."""
    return kernel(M.T)


def perp(U, form=None):
    """All w with <u, w> = 0 for every u in U."""
    if form is not None and form.n != U.n:
        raise DimensionMismatch(f'form of size {form.n} on a subspace of GF(q)^{U.n}')
    if U.dim == 0:
        return Subspace.full(U.GF, U.n)
    M = U.basis if form is None or form.is_standard else U.basis @ form.gram
    return kernel(M)


def join(U, W):
    _check_ambient(U, W)
    if U.dim == 0:
        return W
    if W.dim == 0:
        return U
    GF = U.GF
    return Subspace.span(GF, GF(np.concatenate([U.basis, W.basis])), U.n)


def meet(U, W):
    _check_ambient(U, W)
    GF = U.GF
    if U.dim == 0 or W.dim == 0:
        return Subspace.zero(GF, U.n)
    stacked = GF(np.concatenate([U.basis, W.basis]))
    relations = left_kernel(stacked)
    if relations.dim == 0:
        return Subspace.zero(GF, U.n)
    return Subspace.span(GF, relations.basis[:, :U.dim] @ U.basis, U.n)


def meet_join(U, W):
    """(U meet W, U + W)."""
    return meet(U, W), join(U, W)


def restrict_form(form, U):
    """Restrict ``form`` to ``U``: Gram B G B^T, radical U meet perp(U), and its kind."""
    if form.n != U.n:
        raise DimensionMismatch(f'form of size {form.n} on a subspace of GF(q)^{U.n}')
    gram = U.basis @ form.gram @ U.basis.T
    radical = meet(U, perp(U, form))
    if radical.dim == 0:
        kind = 'non-degenerate'
    elif not np.any(gram != 0):
        kind = 'isotropic'
    else:
        kind = 'mixed'
    return RestrictedForm(gram=gram, radical=radical, kind=kind)


def direct_sum(*spaces):
    """Sum of subspaces, checking that it is direct."""
    total = spaces[0]
    for space in spaces[1:]:
        total = join(total, space)
    if total.dim != sum(s.dim for s in spaces):
        raise ValidationError('sum of subspaces is not direct', rule='direct-sum')
    return total


def embed_columns(U, columns, n):
    """Place the coordinates of U at ``columns`` of GF(q)^n (zeros elsewhere)."""
    GF = U.GF
    rows = GF.Zeros((U.dim, n))
    rows[:, list(columns)] = U.basis
    return Subspace.span(GF, rows, n)


def _check_ambient(U, W):
    if U.n != W.n:
        raise DimensionMismatch(f'ambient dimensions differ: {U.n} vs {W.n}')
    if U.GF is not W.GF:
        raise DimensionMismatch(f'fields differ: {U.GF.name} vs {W.GF.name}')
