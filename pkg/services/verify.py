"""
Self-Dual Codes - Verification Service
=======================================
Independent checks on codes: duals, hull classification, G-invariance,
weight distributions, and a brute-force search over invariant subspaces
that serves as an oracle for the constructions at small sizes.
"""

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from config import get_config
from exceptions import (
    BudgetExceeded, DegreeMismatch, DimensionMismatch, InternalError, ValidationError,
    VerificationMismatch,
)
from services.linalg import Subspace, join, meet, perp
from services.modrep import permutation_matrix, spin_rows

logger = logging.getLogger(__name__)


@dataclass
class HullReport:
    code: Subspace
    dual: Subspace
    relation: str

    @property
    def hull(self):
        return meet(self.code, self.dual)

    def as_dict(self):
        return {
            'relation': self.relation,
            'length': self.code.n,
            'dim': self.code.dim,
            'dual_dim': self.dual.dim,
            'hull_dim': self.hull.dim,
        }


def _generator_matrices(GF, group):
    return [permutation_matrix(GF, g) for g in group.generators]


def dual_code(C, form=None, group=None):
    """C^perp; when ``group`` is given and C is G-stable, the dual is checked G-stable too."""
    if form is not None and form.n != C.n:
        raise DimensionMismatch(f'form of size {form.n} on a code of length {C.n}')
    dual = perp(C, form)
    if group is not None and invariance_check(C, group) and not invariance_check(dual, group):
        raise InternalError('dual of an invariant code is not invariant')
    return dual


def classify_hull(C, form=None, e=None):
    """How C relates to its dual: self_dual, hull_plus_e, self_orthogonal_other or none."""
    GF = C.GF
    e = GF.Ones((1, C.n)) if e is None else GF(e).reshape(1, C.n)
    if not np.any(e != 0):
        raise ValidationError('reference vector must be nonzero', rule='nonzero-e')
    dual = perp(C, form)
    if dual == C:
        relation = 'self_dual'
    elif not C.contains_vectors(e) and dual == join(C, Subspace.span(GF, e, C.n)):
        relation = 'hull_plus_e'
    elif dual.contains(C):
        relation = 'self_orthogonal_other'
    else:
        relation = 'none'
    return HullReport(code=C, dual=dual, relation=relation)


def invariance_check(C, group):
    """True iff C P_g = C for every generator g."""
    if group.degree != C.n:
        raise DegreeMismatch(f'group of degree {group.degree} on a code of length {C.n}')
    if C.dim == 0:
        return True
    return all(Subspace.span(C.GF, C.basis @ P, C.n) == C
               for P in _generator_matrices(C.GF, group))


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------

def codewords(C, budget=None):
    budget = budget or get_config().SEARCH_BUDGET
    q = C.GF.order
    if q ** C.dim > budget:
        raise BudgetExceeded(f'{q}^{C.dim} codewords exceed the budget {budget}',
                             budget=budget)
    if C.dim == 0:
        return C.GF.Zeros((1, C.n))
    coefficients = C.GF(list(itertools.product(range(q), repeat=C.dim)))
    return coefficients @ C.basis


def weight_distribution(C, budget=None):
    """A_0, ..., A_n: how many codewords have each Hamming weight."""
    weights = np.count_nonzero(codewords(C, budget).view(np.ndarray), axis=1)
    return np.bincount(weights, minlength=C.n + 1).tolist()


def minimum_distance(C, budget=None):
    """Least nonzero weight, or None for the zero code."""
    distribution = weight_distribution(C, budget)
    return next((w for w, count in enumerate(distribution) if w and count), None)


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def _cyclic_submodules(V):
    """Submodules spanned by the orbit of a single vector, one per G-orbit of lines."""
    GF, d = V.GF, V.dim
    seen, found = set(), set()
    scalars = [GF(a) for a in range(1, GF.order)]
    mats = list(V.element_matrices.values())
    for values in itertools.product(range(GF.order), repeat=d):
        if values in seen or not any(values):
            continue
        x = GF(values).reshape(1, d)
        for R in mats:
            y = x @ R
            for a in scalars:
                seen.add(tuple(int(v) for v in (a * y).ravel()))
        found.add(spin_rows(GF, V.reps, x, d))
    return sorted(found)


def submodule_lattice(V):
    """Every submodule of V in carrier coordinates, as sums of cyclic submodules."""
    GF, d = V.GF, V.dim
    cyclic = _cyclic_submodules(V)
    lattice = {Subspace.zero(GF, d)} | set(cyclic)
    frontier = set(cyclic)
    while frontier:
        grown = set()
        for U in frontier:
            for S in cyclic:
                W = join(U, S)
                if W not in lattice:
                    grown.add(W)
        lattice |= grown
        frontier = grown
    return sorted(lattice)


def _raw_subspaces(GF, n, k):
    """Every k-dimensional subspace of GF^n, one RREF matrix each."""
    q = GF.order
    for pivots in itertools.combinations(range(n), k):
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        for values in itertools.product(range(q), repeat=len(free)):
            M = GF.Zeros((k, n))
            for r, p in enumerate(pivots):
                M[r, p] = 1
            for (r, c), v in zip(free, values):
                M[r, c] = v
            yield Subspace(M, n)


def brute_force_search(V, target='self_dual', *, budget=None, method='lattice'):
    """
    Look for a submodule of V with the target relation to its dual

    Args:
        V: FGModule carrying the form to test against
        target: 'self_dual' or 'hull_plus_e'
        budget: cap on q^dim(V) (defaults to SEARCH_BUDGET)
        method: 'lattice' (spin and sum) or 'raw' (every subspace; small n only)

    Returns:
        Subspace witness, or None once every candidate has been examined
    """
    if target not in ('self_dual', 'hull_plus_e'):
        raise ValidationError(f'unknown target {target!r}', rule='search-target')
    cfg = get_config()
    budget = budget or cfg.SEARCH_BUDGET
    q, d = V.GF.order, V.dim
    if q ** d > budget:
        raise BudgetExceeded(f'{q}^{d} vectors exceed the search budget {budget}',
                             budget=budget, q=q, dim=d)
    wanted = d // 2 if target == 'self_dual' else (d - 1) // 2
    if (target == 'self_dual') == (d % 2 == 1):
        logger.info('No %s candidate of dimension %d/2 exists', target, d)
        return None

    if method == 'raw':
        if V.n > cfg.RAW_ENUM_MAX_N:
            raise ValidationError(f'raw enumeration is limited to n <= {cfg.RAW_ENUM_MAX_N}',
                                  rule='raw-enumeration')
        candidates = (U for U in _raw_subspaces(V.GF, V.n, wanted)
                      if V.carrier.contains(U) and V.is_stable(U))
    elif method == 'lattice':
        candidates = (V.lift(U) for U in submodule_lattice(V) if U.dim == wanted)
    else:
        raise ValidationError(f'unknown method {method!r}', rule='search-method')

    examined = 0
    for U in candidates:
        examined += 1
        if target == 'self_dual':
            if meet(V.carrier, perp(U, V.form)) == U:
                logger.info('Found a self-dual submodule after %d candidates', examined)
                return U
        elif classify_hull(U, V.form).relation == 'hull_plus_e':
            logger.info('Found a hull_plus_e submodule after %d candidates', examined)
            return U
    logger.info('Search for %s exhausted after %d candidates', target, examined)
    return None


def check_construction(code, group, relation, form=None):
    """Recompute the hull relation and invariance of a constructed code."""
    report = classify_hull(code, form)
    if report.relation != relation:
        raise VerificationMismatch(
            f'constructed code has relation {report.relation}, expected {relation}',
            expected=relation, found=report.relation)
    if not invariance_check(code, group):
        raise VerificationMismatch('constructed code is not G-invariant')
    return report
