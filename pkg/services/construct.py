"""
Self-Dual Codes - Construction Service
=======================================
Constructs witness codes:

  * selfdual_code       U = U^perp inside an FG-module with an invariant form
  * lemma8_code         an H-stable group code C of FA with C^perp = C + Fe
  * induce_code         block copies of an FH-code on an induced G-set
  * theorem3_code       C^perp = C + Fe for a transitive G-set of odd-order G
  * extend_code         the self-dual extended code on X plus one point

and decides which existence criteria apply to a given (G, X, F).
"""

import itertools
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from config import get_config
from exceptions import (
    DimensionMismatch, FailureCertificate, HullMismatch, InternalCaseError, InternalError,
    NoSquareRoot, NotCoprime, NotSubmodule, PreconditionViolated, RationalityFailure,
    ValidationError,
)
from formats import matrix_rows, render_report
from services.gf import cyclotomic_residues, field_label, sqrt
from services.group import (
    coset_gset, image_group, induced_gset, is_normalized_by, minimal_normal_subgroup,
    product_subgroup, restrict_gset, stabilizer, subgroup_from_elements,
)
from services.linalg import (
    Subspace, direct_sum, embed_columns, join, meet, perp, restrict_form,
)
from services.modrep import (
    hom_space, homogeneous_decomposition, invariant_complement, irreducible_submodule,
    multiplicity, permutation_matrix, permutation_module,
)
from services.numtheory import factorize, mult_order, odd_order_check

logger = logging.getLogger(__name__)


@dataclass
class ConstructionReport:
    """Everything needed to audit and replay a construction."""
    operation: str
    field: str
    degree: int
    seed: int = 0
    trail: list = field(default_factory=list)
    codes: dict = field(default_factory=dict)
    summary: dict = field(default_factory=dict)

    def record(self, **entry):
        self.trail.append(entry)
        logger.info('%s: %s', self.operation,
                    ', '.join(f'{k}={v}' for k, v in entry.items() if not isinstance(v, dict)))

    def as_dict(self):
        return {
            'operation': self.operation,
            'field': self.field,
            'degree': self.degree,
            'seeds': {'meataxe': self.seed},
            'summary': self.summary,
            'codes': {name: {'dim': code.dim, 'length': code.n, 'rows': matrix_rows(code.basis)}
                      for name, code in self.codes.items()},
            'trail': self.trail,
        }

    def to_text(self):
        return render_report(self.as_dict())


def _seed(seed):
    return get_config().DEFAULT_SEED if seed is None else seed


def all_ones(GF, n):
    return GF.Ones((1, n))


def has_hull_relation(C, n):
    """C^perp = C + span(e) with e outside C."""
    e = all_ones(C.GF, n)
    if C.contains_vectors(e):
        return False
    return perp(C) == join(C, Subspace.span(C.GF, e, n))


# ---------------------------------------------------------------------------
# Self-dual submodules
# ---------------------------------------------------------------------------

def selfdual_code(V, seed=None, report=None):
    """A submodule U of V with U^perp = U (perp taken inside V).

    Raises FailureCertificate when an irreducible self-dual type occurs with odd
    multiplicity, and PreconditionViolated when the non-degenerate case is met
    outside characteristic 2.
    """
    if V.form is None:
        raise ValidationError('module carries no bilinear form', rule='form-required')
    form = V.form
    if restrict_form(form, V.carrier).kind != 'non-degenerate':
        raise ValidationError('form is degenerate on the module', rule='non-degenerate-form')
    for P in V.gens:
        if not np.array_equal(P @ form.gram @ P.T, form.gram):
            raise ValidationError('form is not G-invariant', rule='invariant-form')

    seed = _seed(seed)
    report = report or ConstructionReport('selfdual', str(V.field), V.n, seed)
    rng = np.random.default_rng(seed)
    U = _selfdual(V, V, rng, report, 0)

    if 2 * U.dim != V.dim or meet(V.carrier, perp(U, form)) != U or not V.is_stable(U):
        raise InternalError('constructed subspace is not a self-dual submodule')
    report.codes.setdefault('selfdual', U)
    return U


def _selfdual(root, Vc, rng, report, depth):
    if Vc.dim == 0:
        return Subspace.zero(root.GF, root.n)
    if depth > root.dim:
        raise InternalError('self-dual recursion does not terminate')
    form = root.form
    W = irreducible_submodule(Vc, rng)
    kind = restrict_form(form, W.carrier).kind
    if kind == 'isotropic':
        report.record(level=depth, case='isotropic', dim=W.dim)
        return _isotropic_step(root, Vc, W, rng, report, depth)
    if kind != 'non-degenerate':
        raise InternalError(f'irreducible submodule with a {kind} form')

    Wperp = Vc.submodule(meet(Vc.carrier, perp(W.carrier, form)))
    homs = hom_space(W, Wperp)
    if homs.dim == 0:
        raise _certificate(root, W, report)
    T = homs.basis[0].reshape(W.dim, Wperp.dim)
    Wt = Vc.submodule(Wperp.lift(Subspace.span(root.GF, T, Wperp.dim)))

    if restrict_form(form, Wt.carrier).kind == 'isotropic':
        report.record(level=depth, case='non-degenerate', dim=W.dim, copy='isotropic')
        return _isotropic_step(root, Vc, Wt, rng, report, depth)
    if root.field.p != 2:
        raise PreconditionViolated(
            'a non-degenerate self-dual factor needs characteristic 2',
            characteristic=root.field.p, dim=W.dim)
    diagonal, trace = _isotropic_diagonal(Vc, W, Wt, form)
    report.record(level=depth, case='non-degenerate', dim=W.dim, copy='non-degenerate',
                  square_root=trace)
    return _isotropic_step(root, Vc, diagonal, rng, report, depth)


def _isotropic_step(root, Vc, W, rng, report, depth):
    """W isotropic: split off W + W' where Vc = W^perp + W', then recurse on (W' + W)^perp."""
    form = root.form
    Wperp = Vc.submodule(meet(Vc.carrier, perp(W.carrier, form)))
    Wprime = invariant_complement(Vc, Wperp)
    rest = Vc.submodule(meet(Vc.carrier, perp(join(Wprime.carrier, W.carrier), form)))
    return join(W.carrier, _selfdual(root, rest, rng, report, depth + 1))


def _isotropic_diagonal(Vc, W, Wt, form):
    """{w + gamma(w)} for an isomorphism gamma: W -> Wt compatible with the forms."""
    GF = Vc.GF
    homs = hom_space(W, Wt)
    T = homs.basis[0].reshape(W.dim, Wt.dim)
    B, Bt = W.carrier.basis, Wt.carrier.basis
    gram_w = B @ form.gram @ B.T
    gram_t = Bt @ form.gram @ Bt.T
    pulled = T @ gram_t @ T.T
    alpha = pulled @ np.linalg.inv(gram_w)
    if not all(np.array_equal(R @ alpha, alpha @ R) for R in W.reps):
        raise InternalError('pulled-back form does not give an endomorphism')

    # F[alpha] is a field of order 2^t
    powers, current = Subspace.zero(GF, W.dim ** 2), GF.Identity(W.dim)
    while True:
        grown = join(powers, Subspace.span(GF, current.reshape(1, -1), W.dim ** 2))
        if grown.dim == powers.dim:
            break
        powers, current = grown, current @ alpha
    t = Vc.field.m * powers.dim
    inverse = np.linalg.inv(alpha)
    beta = inverse
    for _ in range(t - 1):
        beta = beta @ beta
    if not np.array_equal(beta @ beta, inverse) or not np.array_equal(beta @ alpha, alpha @ beta):
        raise InternalError('square root of the form ratio failed')
    gamma = beta @ T
    if not np.array_equal(gamma @ gram_t @ gamma.T, gram_w):
        raise InternalError('gamma is not compatible with the forms')

    diagonal = Vc.submodule(Subspace.span(GF, B + gamma @ Bt, Vc.n))
    if restrict_form(form, diagonal.carrier).kind != 'isotropic':
        raise InternalError('diagonal submodule is not isotropic')
    return diagonal, {'min_poly_degree': powers.dim, 'exponent': f'2^{t - 1}'}


def _certificate(root, W, report):
    """Name the least self-dual class of odd multiplicity in the whole module."""
    decomposition = homogeneous_decomposition(root, report.seed)
    encountered = decomposition.find(W)
    odd = decomposition.odd_self_dual()
    if not odd:
        raise InternalError(f'no odd self-dual class although a dim-{W.dim} factor '
                            f'(multiplicity {multiplicity(W, root)}) has no partner')
    component = odd[0]
    label, count = component.label, component.multiplicity
    report.record(level='failure', case='odd-multiplicity', label=label, dim=component.dim,
                  multiplicity=count, encountered=encountered.label if encountered else None)
    return FailureCertificate(
        f'self-dual composition factor {label} has odd multiplicity {count}',
        label=label, dim=component.dim, multiplicity=count, report=report)


def theorem2_code(X, F, seed=None):
    """A self-dual permutation code of FX (characteristic 2 and odd |G|)."""
    seed = _seed(seed)
    V = permutation_module(X, F)
    report = ConstructionReport('theorem2', field_label(F), X.degree, seed)
    try:
        U = selfdual_code(V, seed, report)
    except FailureCertificate as exc:
        exc.report = report
        raise
    report.codes['selfdual'] = U
    report.summary.update({'dim': U.dim, 'relation': 'self_dual'})
    return U, report


# ---------------------------------------------------------------------------
# Characters of abelian p-groups
# ---------------------------------------------------------------------------

@dataclass
class CharacterTable:
    """Characters of A over E, chi_c(a) = xi^(c . v(a)), stored as exponent rows."""
    group: object
    q: int
    exponent: int
    vectors: list
    characters: list
    values: np.ndarray
    gamma: list
    tau: list
    h_actions: list

    def __len__(self):
        return len(self.characters)


@dataclass
class OrbitPartition:
    orbits: list
    selected: list
    mirrored: list

    def as_dict(self):
        return {
            'orbits': [' '.join(map(str, o)) for o in self.orbits],
            'selected': [' '.join(map(str, self.orbits[i])) for i in self.selected],
            'mirrored': [' '.join(map(str, self.orbits[i])) for i in self.mirrored],
        }


def character_table(A, H, q):
    exponent = A.exponent()
    basis = subgroup_from_elements(A.degree, A.elements)
    r = len(basis.generators)

    vectors = {}
    for a, (parent, i) in basis.tree.items():
        if parent is None:
            vectors[a] = (0,) * r
        else:
            v = list(vectors[parent])
            v[i] = (v[i] + 1) % exponent
            vectors[a] = tuple(v)
    relations = set()
    for a in basis.elements:
        for i, s in enumerate(basis.generators):
            shifted = list(vectors[a])
            shifted[i] += 1
            relations.add(tuple((x - y) % exponent for x, y in zip(shifted, vectors[s * a])))

    ordered = [vectors[a] for a in A.elements]
    characters = [c for c in itertools.product(range(exponent), repeat=r)
                  if all(sum(x * y for x, y in zip(c, rel)) % exponent == 0 for rel in relations)]
    if len(characters) != A.order:
        raise InternalError(f'found {len(characters)} characters for a group of order {A.order}')
    values = np.array([[sum(x * y for x, y in zip(c, v)) % exponent for v in ordered]
                       for c in characters], dtype=np.int64)
    lookup = {tuple(row): i for i, row in enumerate(values.tolist())}

    gamma = [lookup[tuple((row * q) % exponent)] for row in values]
    tau = [lookup[tuple((-row) % exponent)] for row in values]
    index = {a: i for i, a in enumerate(A.elements)}
    h_actions = []
    for h in H.generators:
        h_inv = h.inverse()
        moved = [index[h_inv * a * h] for a in A.elements]
        h_actions.append([lookup[tuple(row[moved])] for row in values])
    return CharacterTable(A, q, exponent, ordered, characters, values, gamma, tau, h_actions)


def orbit_partition(table):
    """Orbits of Gamma x H on nontrivial characters, split into B and its inverse image."""
    parent = list(range(len(table)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for action in [table.gamma] + table.h_actions:
        for x, y in enumerate(action):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    classes = {}
    for x in range(1, len(table)):
        classes.setdefault(find(x), []).append(x)
    orbits = sorted(classes.values())
    owner = {x: i for i, orbit in enumerate(orbits) for x in orbit}

    selected, mirrored = [], []
    for i, orbit in enumerate(orbits):
        if i in selected or i in mirrored:
            continue
        j = owner[table.tau[orbit[0]]]
        if j == i:
            raise InternalError(f'character orbit {orbit} is closed under inversion')
        selected.append(i)
        mirrored.append(j)
    return OrbitPartition(orbits, selected, mirrored)


def lemma8_code(A, H, F, report=None):
    """An H-stable code C of F^A (coordinates in A.elements order) with C^perp = C + Fe."""
    n = A.order
    primes = {p for p, _ in factorize(n)}
    if len(primes) != 1 or not A.is_abelian():
        raise PreconditionViolated(f'A of order {n} is not an abelian p-group', order=n)
    p = primes.pop()
    if p == 2 or p == F.p:
        raise PreconditionViolated(f'p = {p} must be odd and differ from the characteristic',
                                   p=p, q=F.order)
    order_p = mult_order(F.order, p)
    if order_p % 2 == 0:
        raise PreconditionViolated(f'order of {F.order} mod {p} is {order_p}, which is even',
                                   q=F.order, p=p, order=order_p)
    if H.order % 2 == 0:
        raise PreconditionViolated(f'|H| = {H.order} is even', order=H.order)
    if not is_normalized_by(A, H):
        raise PreconditionViolated('H does not act on A by conjugation')

    exponent = A.exponent()
    modulus, residues = cyclotomic_residues(F, exponent)
    table = character_table(A, H, F.order)
    partition = orbit_partition(table)

    # epsilon(a) = (1/n) sum over chosen c of xi^(-c . v(a)), computed in F[x]/(modulus)
    chosen = [c for i in partition.selected for c in partition.orbits[i]]
    counts = np.zeros((n, exponent), dtype=np.int64)
    for c in chosen:
        np.add.at(counts, (np.arange(n), (-table.values[c]) % exponent), 1)
    epsilon = F.GF(counts % F.p) @ residues
    if np.any(epsilon[:, 1:].view(np.ndarray)):
        raise RationalityFailure('idempotent is not fixed by the Frobenius')
    rational = epsilon[:, 0] / F.scalar(n)

    index = {a: i for i, a in enumerate(A.elements)}
    translates = F.zeros((n, n))
    for row, b in enumerate(A.elements):
        b_inv = b.inverse()
        moved = [index[b_inv * a] for a in A.elements]
        translates[row] = rational[moved]
    C = Subspace.span(F.GF, translates, n)

    if C.dim != (n - 1) // 2 or not has_hull_relation(C, n):
        raise InternalError(f'character code has dim {C.dim} without the hull relation')
    for h in H.generators:
        conj = [index[h * a * h.inverse()] for a in A.elements]
        moved = F.zeros((C.dim, n))
        moved[:, conj] = C.basis
        if not C.contains_vectors(moved):
            raise InternalError('character code is not stable under H')

    if report is not None:
        report.record(case='characters', order=n, prime=p, exponent=exponent,
                      extension_degree=modulus.degree, modulus=str(modulus),
                      characters=len(table),
                      partition=partition.as_dict())
    return C


# ---------------------------------------------------------------------------
# Induction and the transitive construction
# ---------------------------------------------------------------------------

def _block_copies(D, blocks, size):
    GF = D.GF
    total = blocks * size
    if D.dim == 0:
        return Subspace.zero(GF, total)
    rows = GF.Zeros((blocks * D.dim, total))
    for t in range(blocks):
        rows[t * D.dim:(t + 1) * D.dim, t * size:(t + 1) * size] = D.basis
    return Subspace.span(GF, rows, total)


def induce_code(G, H, Y, D, induced=None):
    """Ind_H^G(D): a copy of D on every block t (x) Y."""
    if D.n != Y.degree:
        raise DimensionMismatch(f'code of length {D.n} on an H-set of size {Y.degree}')
    for image in Y.gen_images:
        if D.dim and not D.contains_vectors(D.basis @ permutation_matrix(D.GF, image)):
            raise NotSubmodule('code is not stable under H')
    induced = induced or induced_gset(G, H, Y)
    blocks = len(induced.transversal)
    code = _block_copies(D, blocks, Y.degree)
    if perp(code) != _block_copies(perp(D), blocks, Y.degree):
        raise InternalError('induction does not commute with taking duals')
    return code


def theorem3_code(G, X, F, seed=None):
    """C with C^perp = C + Fe for a transitive G-set X of an odd-order group."""
    if not X.is_transitive:
        raise ValidationError('G-set is not transitive', rule='transitive')
    if G.order % 2 == 0:
        raise PreconditionViolated(f'|G| = {G.order} is even', order=G.order)
    n = X.degree
    try:
        witness = odd_order_check(F.order, n)
    except NotCoprime as exc:
        raise PreconditionViolated(f'q = {F.order} is not coprime to n = {n}',
                                   q=F.order, n=n) from exc
    if not witness.passed:
        raise PreconditionViolated(f'order of {F.order} mod {n} is {witness.order}, which is even',
                                   q=F.order, n=n, order=witness.order)

    seed = _seed(seed)
    report = ConstructionReport('theorem3', field_label(F), n, seed)
    report.summary['order_witness'] = witness.as_dict()
    limit = max(G.order.bit_length(), 1)
    C = _theorem3(X, F, report, 0, limit)

    if 2 * C.dim != n - 1 or not has_hull_relation(C, n):
        raise InternalError(f'theorem3 output has dim {C.dim} without the hull relation')
    report.codes['hull'] = C
    report.summary.update({'dim': C.dim, 'relation': 'hull_plus_e'})
    return C, report


def _theorem3(X, F, report, depth, limit):
    G, Xn = image_group(X)
    n = X.degree
    if n == 1:
        report.record(level=depth, degree=1, group_order=G.order, case='trivial')
        return Subspace.zero(F.GF, 1)
    if depth > limit:
        raise InternalError('transitive recursion does not terminate')

    G1 = stabilizer(Xn, 0)
    A = minimal_normal_subgroup(G)
    if all(a.is_identity for a in A.generators):
        raise InternalCaseError('minimal normal subgroup acts trivially on a faithful G-set')
    AG1 = product_subgroup(A, G1)
    entry = {'level': depth, 'degree': n, 'group_order': G.order,
             'stabilizer_order': G1.order, 'minimal_normal_order': A.order,
             'product_order': AG1.order}

    if AG1.order == G.order:
        if A.order != n:
            raise InternalError('minimal normal subgroup is not regular')
        report.record(case='regular-normal', **entry)
        C_A = lemma8_code(A, G1, F, report)
        return embed_columns(C_A, [a(0) for a in A.elements], n)

    report.record(case='induced', **entry)
    points = sorted({g(0) for g in AG1.elements})
    Y = restrict_gset(Xn, AG1, points)
    D = _theorem3(Y, F, report, depth + 1, limit)
    induced = induced_gset(G, AG1, Y)
    placement = [t(points[y]) for t in induced.transversal for y in range(Y.degree)]
    if sorted(placement) != list(range(n)):
        raise InternalError('blocks of the induced G-set do not tile X')
    Ind = embed_columns(induce_code(G, AG1, Y, D, induced), placement, n)

    Z = coset_gset(G, AG1)
    E_Z = _theorem3(Z, F, report, depth + 1, limit)
    blocks = F.zeros((Z.degree, n))
    for t in range(Z.degree):
        blocks[t, placement[t * Y.degree:(t + 1) * Y.degree]] = 1
    E = Subspace.span(F.GF, E_Z.basis @ blocks, n) if E_Z.dim else Subspace.zero(F.GF, n)
    return direct_sum(Ind, E)


def regular_normal_code(X, F, seed=None):
    """The character construction for a transitive X whose minimal normal subgroup is regular."""
    if not X.is_transitive:
        raise ValidationError('G-set is not transitive', rule='transitive')
    G, Xn = image_group(X)
    n = X.degree
    report = ConstructionReport('lemma8', field_label(F), n, _seed(seed))
    if G.order == 1:
        C = Subspace.zero(F.GF, 1)
    else:
        A = minimal_normal_subgroup(G)
        if A.order != n:
            raise PreconditionViolated(
                f'minimal normal subgroup of order {A.order} is not regular on {n} points',
                order=A.order, n=n)
        G1 = stabilizer(Xn, 0)
        C = embed_columns(lemma8_code(A, G1, F, report), [a(0) for a in A.elements], n)
    report.codes['hull'] = C
    report.summary.update({'dim': C.dim, 'relation': 'hull_plus_e'})
    return C, report


# ---------------------------------------------------------------------------
# Extended codes
# ---------------------------------------------------------------------------

def extend_code(C, n, F):
    """C-hat = span(lambda x0 + e) + C on X plus a last point x0, lambda^2 = -n."""
    if C.n != n:
        raise DimensionMismatch(f'code of length {C.n}, expected {n}')
    if not has_hull_relation(C, n):
        raise HullMismatch('code does not satisfy C^perp = C + Fe')
    lam = sqrt(F.scalar(-n))
    if lam is None:
        raise NoSquareRoot(f'-{n} is not a square in {F!r}', n=n, q=F.order)

    GF = F.GF
    rows = GF.Zeros((C.dim + 1, n + 1))
    rows[0, :n] = 1
    rows[0, n] = lam
    rows[1:, :n] = C.basis
    extended = Subspace.span(GF, rows, n + 1)
    if perp(extended) != extended:
        raise InternalError('extended code is not self-dual')
    logger.info('Extended a [%d,%d] code with lambda=%d', n, C.dim, int(lam))
    return extended, lam


def recover_hull_code(extended, n):
    """Undo extend_code: (C, lambda) from a self-dual code on X plus a last point."""
    GF = extended.GF
    if extended.n != n + 1:
        raise DimensionMismatch(f'code of length {extended.n}, expected {n + 1}')
    if perp(extended) != extended:
        raise HullMismatch('code is not self-dual')

    ones = GF.Zeros((2, n + 1))
    ones[0, :n] = 1
    ones[1, n] = 1
    piece = meet(extended, Subspace.span(GF, ones, n + 1))
    if piece.dim != 1 or piece.basis[0, 0] == 0:
        raise HullMismatch('trivial part of the code is not spanned by lambda x0 + e')
    lam = piece.basis[0, n] / piece.basis[0, 0]

    last = Subspace.span(GF, GF.Identity(n + 1)[n:], n + 1)
    C_rows = meet(extended, perp(last))
    C = Subspace.span(GF, C_rows.basis[:, :n], n) if C_rows.dim else Subspace.zero(GF, n)
    if lam ** 2 != GF((-n) % GF.characteristic) or not has_hull_relation(C, n):
        raise HullMismatch('recovered code does not satisfy C^perp = C + Fe')
    return C, lam


def extended_code(X, F, seed=None):
    """theorem3_code followed by extend_code."""
    C, report = theorem3_code(X.group, X, F, seed)
    extended, lam = extend_code(C, X.degree, F)
    report.operation = 'extend'
    report.codes['extended'] = extended
    report.summary.update({'lambda': int(lam), 'extended_dim': extended.dim,
                           'extended_relation': 'self_dual'})
    return extended, report


# ---------------------------------------------------------------------------
# Existence criteria
# ---------------------------------------------------------------------------

def _status(applicable, passed):
    if not applicable:
        return 'n/a'
    return 'pass' if passed else 'fail'


def decide_existence(X, F, seed=None):
    """Which existence criteria apply to (G, X, F) and whether they hold."""
    G = X.group
    if math.gcd(G.order, F.p) != 1:
        raise NotCoprime(f'|G| = {G.order} is not coprime to q = {F.order}',
                         order=G.order, q=F.order)
    decomposition = homogeneous_decomposition(permutation_module(X, F), seed)
    odd = decomposition.odd_self_dual()
    self_dual = [c.label for c in decomposition.components if c.self_dual]
    char2 = F.p == 2

    verdict = {
        'field': field_label(F),
        'degree': X.degree,
        'group_order': G.order,
        'transitive': X.is_transitive,
        'classes': [c.as_dict() for c in decomposition.components],
        'theorem2': {
            'status': _status(char2 and G.order % 2 == 1, not odd),
            'odd_self_dual': [c.label for c in odd],
        },
        'proposition2': {
            'status': _status(True, not self_dual),
            'self_dual_classes': self_dual,
        },
        'extended': _extended_criteria(X, F),
    }
    logger.info('Existence verdicts for n=%d over %r: theorem2=%s extended=%s', X.degree, F,
                verdict['theorem2']['status'], verdict['extended']['theorem3']['status'])
    return verdict


def _extended_criteria(X, F):
    n = X.degree
    applicable = X.is_transitive and X.group.order % 2 == 1
    coprime = math.gcd(F.order, n) == 1
    witness = odd_order_check(F.order, n) if coprime else None
    odd = bool(witness and witness.passed)
    root = sqrt(F.scalar(-n))
    return {
        'coprime': coprime,
        'order': witness.order if witness else None,
        'square_root': int(root) if root is not None else None,
        'theorem3': {'status': _status(applicable, coprime and odd)},
        'corollary2': {'status': _status(applicable and F.p == 2, coprime and odd)},
        'corollary3': {'status': _status(applicable, coprime and odd and root is not None)},
    }
