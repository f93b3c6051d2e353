"""
Self-Dual Codes - Modular Representation Service
=================================================
FG-modules as subspaces of F^X carrying the generator action matrices:
spinning, invariant complements by averaging over G, Meataxe-style
irreducible decomposition, homomorphism spaces, dual modules, invariant
forms and homogeneous decomposition.

Matrices act on row vectors. For a module with carrier basis B (in RREF),
the coordinates of a carrier vector v are ``v[pivots]`` and the action of
generator g in carrier coordinates is ``(B @ P_g)[:, pivots]``.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from config import get_config
from exceptions import (
    DecompositionStalled, InternalError, NotCoprime, NotIrreducible, NotSubmodule,
    ValidationError, VectorOutsideCarrier,
)
from services.linalg import SymForm, Subspace, direct_sum, kernel, kron, left_kernel

logger = logging.getLogger(__name__)


class FGModule:
    """A submodule (``carrier``) of F^n on which each group generator acts by ``gens[i]``."""

    def __init__(self, field, group, gens, carrier, form=None):
        self.field = field
        self.group = group
        self.gens = tuple(gens)
        self.carrier = carrier
        self.form = form

    @classmethod
    def from_matrices(cls, field, group, mats, dim=None, *, check=True):
        """A module given directly by its generator matrices (carrier = whole space)."""
        GF = field.GF
        d = mats[0].shape[0] if mats else dim
        module = cls(field, group, mats, Subspace.full(GF, d))
        if check:
            module.check_relations()
        return module

    @property
    def GF(self):
        return self.field.GF

    @property
    def n(self):
        return self.carrier.n

    @property
    def dim(self):
        return self.carrier.dim

    @cached_property
    def reps(self):
        """Generator actions in carrier coordinates."""
        B, pivots = self.carrier.basis, self.carrier.pivots
        return tuple((B @ P)[:, pivots] for P in self.gens)

    @cached_property
    def element_matrices(self):
        """Every group element's action in carrier coordinates."""
        mats = {}
        for e, (parent, i) in self.group.tree.items():
            mats[e] = self.GF.Identity(self.dim) if parent is None else mats[parent] @ self.reps[i]
        return mats

    @property
    def is_trivial(self):
        identity = self.GF.Identity(self.dim)
        return all(np.array_equal(R, identity) for R in self.reps)

    def check_relations(self):
        mats = self.element_matrices
        for e in self.group.elements:
            for i, s in enumerate(self.group.generators):
                if not np.array_equal(mats[s * e], mats[e] @ self.reps[i]):
                    raise ValidationError('matrices violate the group relations',
                                          rule='module-relations')

    def is_stable(self, U):
        if not self.carrier.contains(U):
            return False
        return all(U.contains_vectors(U.basis @ P) for P in self.gens)

    def submodule(self, U):
        if not self.is_stable(U):
            raise NotSubmodule(f'{U!r} is not a submodule of {self!r}')
        return FGModule(self.field, self.group, self.gens, U, self.form)

    def lift(self, coords):
        """Carry a Subspace of carrier coordinates back into the ambient space."""
        if coords.dim == 0:
            return Subspace.zero(self.GF, self.n)
        return Subspace.span(self.GF, coords.basis @ self.carrier.basis, self.n)

    def coordinates(self, vectors):
        vectors = self.GF(vectors).reshape(-1, self.n)
        if not self.carrier.contains_vectors(vectors):
            raise VectorOutsideCarrier('vector is not in the module carrier')
        return self.carrier.coordinates(vectors)

    def __repr__(self):
        return f'FGModule(dim={self.dim}, n={self.n}, field={self.field!r})'


@dataclass
class ModuleHom:
    """x -> x @ matrix from source carrier coordinates to target carrier coordinates."""
    source: FGModule
    target: FGModule
    matrix: object

    def image(self):
        coords = Subspace.span(self.source.GF, self.matrix, self.target.dim)
        return self.target.lift(coords)


def permutation_matrix(GF, perm):
    n = perm.degree
    P = GF.Zeros((n, n))
    P[np.arange(n), list(perm.images)] = 1
    return P


def permutation_module(X, F):
    """FX with the standard inner product."""
    if math.gcd(X.group.order, F.p) != 1:
        raise NotCoprime(f'|G| = {X.group.order} is not coprime to q = {F.order}',
                         order=X.group.order, q=F.order)
    GF = F.GF
    gens = [permutation_matrix(GF, image) for image in X.gen_images]
    identity = GF.Identity(X.degree)
    for P in gens:
        if not np.array_equal(P @ P.T, identity):
            raise InternalError('permutation matrix is not orthogonal')
    return FGModule(F, X.group, gens, Subspace.full(GF, X.degree), SymForm.standard(GF, X.degree))


def spin_rows(GF, mats, rows, n):
    """Smallest subspace of GF^n containing ``rows`` and stable under ``mats``."""
    space = Subspace.span(GF, rows, n)
    while space.dim:
        images = [space.basis] + [space.basis @ M for M in mats]
        grown = Subspace.span(GF, GF(np.concatenate(images)), n)
        if grown.dim == space.dim:
            break
        space = grown
    return space


def spin(V, v):
    """The submodule of V generated by v."""
    v = V.GF(v).reshape(1, V.n)
    if not V.carrier.contains_vectors(v):
        raise VectorOutsideCarrier('cannot spin a vector outside the module')
    return FGModule(V.field, V.group, V.gens, spin_rows(V.GF, V.gens, v, V.n), V.form)


def invariant_complement(V, U):
    """A submodule U' with V = U + U' (direct), from the G-average of a projection onto U."""
    U = U.carrier if isinstance(U, FGModule) else U
    if not V.is_stable(U):
        raise NotSubmodule(f'{U!r} is not a submodule of {V!r}')
    order = V.field.scalar(V.group.order)
    if order == 0:
        raise NotCoprime(f'|G| = {V.group.order} vanishes in {V.field!r}')

    GF, d = V.GF, V.dim
    Uc = Subspace.span(GF, V.carrier.coordinates(U.basis), d) if U.dim else Subspace.zero(GF, d)
    if Uc.dim == d:
        return V.submodule(Subspace.zero(GF, V.n))
    if Uc.dim == 0:
        return V

    projection = GF.Zeros((d, d))
    projection[Uc.pivots, :] = Uc.basis
    mats = V.element_matrices
    average = GF.Zeros((d, d))
    for g, R in mats.items():
        average = average + R @ projection @ mats[g.inverse()]
    average = average / order

    complement = V.submodule(V.lift(left_kernel(average)))
    if complement.dim + U.dim != V.dim:
        raise InternalError('averaged projection does not split the module')
    return complement


# ---------------------------------------------------------------------------
# Meataxe
# ---------------------------------------------------------------------------

def _algebra_words(reps, length=3):
    words, layer = list(reps), list(reps)
    for _ in range(length - 1):
        layer = [w @ r for w in layer for r in reps]
        words += layer
    return words


def _kernel_vectors(GF, null, rng, samples=16):
    """Basis rows of a kernel, then random nonzero combinations of them."""
    yield from null.basis
    for _ in range(samples):
        v = GF.Random((1, null.dim), seed=rng) @ null.basis
        if np.any(v.view(np.ndarray)):
            yield v[0]


def find_submodule(M, rng, retries=None):
    """A proper nonzero submodule of M in carrier coordinates, or None if M is irreducible.

    Holt-Rees variant of the Meataxe on a random algebra element theta and an
    irreducible characteristic factor f. Any kernel vector of f(theta) whose
    spin is proper gives a submodule. Only when nullity f(theta) = deg f and
    neither a kernel vector nor a kernel vector of the transpose spins to a
    proper subspace is M certified irreducible.
    """
    GF, d = M.GF, M.dim
    if d <= 1:
        return None
    if not M.reps or M.is_trivial:
        return Subspace.span(GF, GF.Identity(d)[:1], d)

    retries = retries or get_config().MEATAXE_RETRIES
    words = _algebra_words(M.reps)
    transposed = [R.T for R in M.reps]
    for _ in range(retries):
        coefficients = GF.Random(len(words), seed=rng)
        theta = GF.Zeros((d, d))
        for c, W in zip(coefficients, words):
            theta = theta + c * W
        factors, _ = theta.characteristic_poly().factors()
        for f in sorted(factors, key=lambda f: (f.degree, int(f))):
            N = f(theta, elementwise=False)
            null = left_kernel(N)
            if null.dim == 0:
                continue
            if null.dim > f.degree:
                for v in _kernel_vectors(GF, null, rng):
                    S = spin_rows(GF, M.reps, v.reshape(1, d), d)
                    if S.dim < d:
                        return S
                continue
            S = spin_rows(GF, M.reps, null.basis[:1], d)
            if S.dim < d:
                return S
            St = spin_rows(GF, transposed, kernel(N).basis[:1], d)
            if St.dim < d:
                return kernel(St.basis)
            return None
    raise DecompositionStalled(f'no good algebra element after {retries} tries on {M!r}',
                               dim=d, retries=retries)


def _rng(seed):
    return np.random.default_rng(get_config().DEFAULT_SEED if seed is None else seed)


def is_irreducible(W, seed=None):
    return W.dim > 0 and find_submodule(W, _rng(seed)) is None


def irreducible_submodule(V, rng):
    """Descend through proper submodules until an irreducible one is reached."""
    M = V
    while True:
        S = find_submodule(M, rng)
        if S is None:
            return M
        M = M.submodule(M.lift(S))


def decompose(V, seed=None):
    """Split V into irreducible submodules whose direct sum is V."""
    rng = _rng(seed)
    pieces, stack = [], [V]
    while stack:
        M = stack.pop()
        if M.dim == 0:
            continue
        S = find_submodule(M, rng)
        if S is None:
            pieces.append(M)
            continue
        U = M.submodule(M.lift(S))
        stack += [invariant_complement(M, U), U]
    pieces.sort(key=lambda W: W.carrier.sort_key())
    logger.debug('Decomposed %r into dims %s', V, [W.dim for W in pieces])
    return pieces


# ---------------------------------------------------------------------------
# Homomorphisms and forms
# ---------------------------------------------------------------------------

def hom_space(W, V):
    """All T with R_W(g) T = T R_V(g), as a Subspace of row-major vec(T)."""
    GF = W.GF
    a, b = W.dim, V.dim
    if not W.reps:
        return Subspace.full(GF, a * b)
    Ia, Ib = GF.Identity(a), GF.Identity(b)
    blocks = [kron(Ra, Ib) - kron(Ia, Rb.T) for Ra, Rb in zip(W.reps, V.reps)]
    return kernel(GF(np.concatenate(blocks)))


def _check_pair(W, V):
    if W.field != V.field or not W.group.same_elements(V.group):
        raise ValidationError('modules of different fields or groups', rule='same-algebra')


def iso_test(W, W2, *, check=True, seed=None):
    """An isomorphism W -> W2 between irreducibles, or None."""
    _check_pair(W, W2)
    if check:
        for module in (W, W2):
            if not is_irreducible(module, seed):
                raise NotIrreducible(f'{module!r} is not irreducible')
    if W.dim != W2.dim:
        return None
    homs = hom_space(W, W2)
    if homs.dim == 0:
        return None
    return ModuleHom(W, W2, homs.basis[0].reshape(W.dim, W2.dim))


def multiplicity(W, V):
    """Number of copies of the irreducible W in the semisimple V."""
    return hom_space(W, V).dim // hom_space(W, W).dim


def dual_module(W):
    """The contragredient module: g acts by the transpose of its inverse."""
    if W.dim == 0:
        return W
    mats = [np.linalg.inv(R).T for R in W.reps]
    return FGModule.from_matrices(W.field, W.group, mats, W.dim, check=False)


def invariant_forms(W, *, symmetric):
    """Gram matrices M with R M R^T = M for every generator, as vec(M) rows."""
    GF, d = W.GF, W.dim
    identity = GF.Identity(d * d)
    blocks = [kron(R, R) - identity for R in W.reps]
    if symmetric:
        swap = GF.Zeros((d * d, d * d))
        rows = np.arange(d * d)
        swap[rows, (rows % d) * d + rows // d] = 1
        blocks.append(identity - swap)
    if not blocks:
        return Subspace.full(GF, d * d)
    return kernel(GF(np.concatenate(blocks)))


def self_dual_test(W, require_symmetric=None, *, check=True, seed=None):
    """Gram matrix of a nonzero G-invariant form on W, or None if W is not self-dual.

    Symmetric forms are required by default in characteristic 2.
    """
    if check and not is_irreducible(W, seed):
        raise NotIrreducible(f'{W!r} is not irreducible')
    if require_symmetric is None:
        require_symmetric = W.field.p == 2
    forms = invariant_forms(W, symmetric=require_symmetric)
    if forms.dim == 0:
        return None
    return forms.basis[0].reshape(W.dim, W.dim)


# ---------------------------------------------------------------------------
# Homogeneous decomposition
# ---------------------------------------------------------------------------

@dataclass
class HomogeneousComponent:
    component: FGModule
    sample: FGModule
    multiplicity: int
    self_dual: bool
    label: str = ''

    @property
    def dim(self):
        return self.sample.dim

    def as_dict(self):
        return {
            'label': self.label,
            'dim': self.dim,
            'multiplicity': self.multiplicity,
            'self_dual': self.self_dual,
            'trivial': self.sample.is_trivial,
        }


@dataclass
class HomogeneousDecomposition:
    module: FGModule
    components: list = field(default_factory=list)
    seed: int = 0

    def odd_self_dual(self):
        return [c for c in self.components if c.self_dual and c.multiplicity % 2]

    def has_self_dual_factor(self):
        return any(c.self_dual for c in self.components)

    def find(self, W):
        """The component whose irreducible type is W's."""
        for c in self.components:
            if c.dim == W.dim and iso_test(c.sample, W, check=False) is not None:
                return c
        return None


def homogeneous_decomposition(V, seed=None):
    """Group the irreducible summands of V into isomorphism classes."""
    pieces = decompose(V, seed)
    classes = []
    for piece in pieces:
        for members in classes:
            if iso_test(members[0], piece, check=False) is not None:
                members.append(piece)
                break
        else:
            classes.append([piece])

    components = []
    for members in classes:
        sample = min(members, key=lambda W: W.carrier.sort_key())
        carrier = direct_sum(*(W.carrier for W in members))
        components.append(HomogeneousComponent(
            component=V.submodule(carrier),
            sample=sample,
            multiplicity=len(members),
            self_dual=self_dual_test(sample, check=False) is not None,
        ))
    components.sort(key=lambda c: c.sample.carrier.sort_key())

    per_dim = {}
    for c in components:
        c.label = f'dim{c.dim}#{per_dim.get(c.dim, 0)}'
        per_dim[c.dim] = per_dim.get(c.dim, 0) + 1
    if sum(c.dim * c.multiplicity for c in components) != V.dim:
        raise InternalError('homogeneous components do not add up to the module')
    logger.info('Homogeneous decomposition of %r: %s', V,
                ', '.join(f'{c.label} x{c.multiplicity}' for c in components))
    return HomogeneousDecomposition(module=V, components=components,
                                    seed=get_config().DEFAULT_SEED if seed is None else seed)
