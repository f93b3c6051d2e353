"""
Self-Dual Codes - Acceptance Suite Service
===========================================
Sweeps over the built-in group library that cross-check the constructions
against the existence criteria and the brute-force oracle. Every sweep
returns a status dict: ``status`` is ``ok`` or ``error``, ``details`` a
one-paragraph summary, ``rows`` the per-instance records.
"""

import logging
import math
import time
from functools import lru_cache

import numpy as np

from constants import (
    EXTENSION_FIELDS, EXTENSION_ODD_INSTANCES, GROUP_LIBRARY, GROUP_ORDERS, LEMMA6_BASES,
    LEMMA6_LIMIT, LEMMA7_FIELDS, LEMMA7_INSTANCES, THEOREM2_FIELDS, THEOREM2_MAX_DEGREE,
    THEOREM3_FIELDS, THEOREM3_TIME_LIMIT,
)
from exceptions import (
    BudgetExceeded, FailureCertificate, InternalError, NoSquareRoot, SelfDualError,
)
from services.construct import (
    decide_existence, extended_code, induce_code, recover_hull_code, theorem2_code,
    theorem3_code,
)
from services.gf import field_from_order
from services.group import coset_gset, disjoint_union, group_make, subgroups
from services.linalg import perp
from services.modrep import permutation_matrix, permutation_module, spin_rows
from services.numtheory import odd_order_check
from services.verify import brute_force_search, check_construction

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def load_group(name):
    """Build a library group by name."""
    degree, gens = GROUP_LIBRARY[name]
    G = group_make(degree, gens)
    if G.order != GROUP_ORDERS[name]:
        raise InternalError(f'library group {name} has order {G.order}, expected {GROUP_ORDERS[name]}')
    return G


@lru_cache(maxsize=None)
def _subgroups(name):
    return tuple(subgroups(load_group(name), up_to_conjugacy=True))


@lru_cache(maxsize=None)
def _proper_subgroups(name, index):
    H = _subgroups(name)[index]
    return tuple(K for K in subgroups(H) if K.order < H.order) or (H,)


def transitive_actions(name, max_degree=None):
    """(label, G-set) for G acting on the cosets of each subgroup class, by increasing degree."""
    G = load_group(name)
    actions = []
    for H in _subgroups(name):
        degree = G.order // H.order
        if max_degree is None or degree <= max_degree:
            actions.append((f'{name}/{H.order}', coset_gset(G, H)))
    return sorted(actions, key=lambda item: item[1].degree)


def action_unions(name, max_degree):
    """Transitive actions and unions of two of them, total degree at most ``max_degree``."""
    actions = transitive_actions(name, max_degree)
    unions = list(actions)
    for i, (label_a, A) in enumerate(actions):
        for label_b, B in actions[i:]:
            if A.degree + B.degree <= max_degree:
                unions.append((f'{label_a}+{label_b}', disjoint_union(A, B)))
    return unions


def _summary(name, rows, failures):
    status = 'error' if failures else 'ok'
    details = f'{name}: {len(rows)} instances, {len(failures)} failures'
    logger.info(details)
    return {'status': status, 'details': details, 'rows': rows, 'failures': failures}


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

def run_theorem2_suite(fields=THEOREM2_FIELDS, max_degree=THEOREM2_MAX_DEGREE, groups=None,
                       seed=None):
    """Multiplicity criterion, construction and brute force must agree on every union."""
    rows, failures = [], []
    for name in groups or GROUP_LIBRARY:
        for label, X in action_unions(name, max_degree):
            for q in fields:
                F = field_from_order(q)
                if math.gcd(X.group.order, F.p) != 1:
                    continue
                criterion = decide_existence(X, F, seed)['theorem2']['status'] == 'pass'
                try:
                    theorem2_code(X, F, seed)
                    constructed = True
                except FailureCertificate:
                    constructed = False
                try:
                    oracle = brute_force_search(permutation_module(X, F)) is not None
                except BudgetExceeded:
                    oracle = None
                row = {'instance': label, 'q': q, 'degree': X.degree, 'criterion': criterion,
                       'constructed': constructed, 'oracle': oracle}
                rows.append(row)
                if constructed != criterion or (oracle is not None and oracle != criterion):
                    logger.error('Disagreement on %s over GF(%d): %s', label, q, row)
                    failures.append(row)
    return _summary('theorem2', rows, failures)


def run_theorem3_suite(fields=THEOREM3_FIELDS, groups=None, seed=None,
                       time_limit=THEOREM3_TIME_LIMIT):
    """theorem3_code on every admissible transitive action."""
    rows, failures = [], []
    for name in groups or GROUP_LIBRARY:
        for label, X in transitive_actions(name):
            n = X.degree
            for q in fields:
                if math.gcd(q, n) != 1 or not odd_order_check(q, n).passed:
                    continue
                F = field_from_order(q)
                started = time.perf_counter()
                row = {'instance': label, 'q': q, 'degree': n}
                try:
                    C, _ = theorem3_code(X.group, X, F, seed)
                    check_construction(C, _image_of(X), 'hull_plus_e')
                    row.update(dim=C.dim, ok=2 * C.dim == n - 1)
                except SelfDualError as exc:
                    row.update(dim=None, ok=False, error=type(exc).__name__)
                row['seconds'] = round(time.perf_counter() - started, 3)
                if row['seconds'] > time_limit:
                    row['ok'] = False
                rows.append(row)
                if not row['ok']:
                    logger.error('theorem3 failed on %s over GF(%d): %s', label, q, row)
                    failures.append(row)
    return _summary('theorem3', rows, failures)


def _image_of(X):
    """X's action as a permutation group on its points."""
    return group_make(X.degree, list(X.gen_images))


def run_lemma7_suite(instances=LEMMA7_INSTANCES, seed=0, fields=LEMMA7_FIELDS, groups=None):
    """perp(Ind D) = Ind(perp D) on random subgroups, H-sets and invariant codes D."""
    rng = np.random.default_rng(seed)
    names = list(groups or GROUP_LIBRARY)
    rows, failures = [], []
    for index in range(instances):
        name = names[rng.integers(len(names))]
        G = load_group(name)
        subs = _subgroups(name)
        choice = int(rng.integers(len(subs)))
        H = subs[choice]
        inner = _proper_subgroups(name, choice)
        K = inner[rng.integers(len(inner))]
        Y = coset_gset(H, K)
        F = field_from_order(int(fields[rng.integers(len(fields))]))
        GF = F.GF
        v = GF.Random((1, Y.degree), seed=rng)
        mats = [permutation_matrix(GF, image) for image in Y.gen_images]
        D = spin_rows(GF, mats, v, Y.degree)
        row = {'instance': index, 'group': name, 'H': H.order, 'Y': Y.degree, 'q': F.order,
               'dim': D.dim, 'self_orthogonal': perp(D).contains(D) if D.dim else True}
        try:
            code = induce_code(G, H, Y, D)
            blocks = G.order // H.order
            row['ok'] = code.dim == blocks * D.dim and perp(code).dim == blocks * (Y.degree - D.dim)
        except InternalError as exc:
            row.update(ok=False, error=exc.message)
        rows.append(row)
        if not row['ok']:
            failures.append(row)
    return _summary('lemma7', rows, failures)


def run_lemma6_suite(limit=LEMMA6_LIMIT, bases=LEMMA6_BASES):
    """Global odd-order verdict equals the all-primes verdict for every odd n <= limit."""
    rows, failures = [], []
    for q in bases:
        checked = passed = 0
        for n in range(1, limit + 1, 2):
            if math.gcd(q, n) != 1:
                continue
            try:
                passed += odd_order_check(q, n).passed
            except InternalError as exc:
                failures.append({'q': q, 'n': n, 'error': exc.message})
            checked += 1
        rows.append({'q': q, 'checked': checked, 'odd_order': passed})
    return _summary('lemma6', rows, failures)


def run_extension_suite(fields=EXTENSION_FIELDS, groups=None, seed=None):
    """Self-dual extended codes and their round trip back to the hull relation."""
    instances = []
    for name in groups or GROUP_LIBRARY:
        for label, X in transitive_actions(name):
            instances += [(label, X, q) for q in fields]
    if groups is None:
        for name, q in EXTENSION_ODD_INSTANCES:
            instances += [(label, X, q) for label, X in transitive_actions(name) if X.degree > 1]

    rows, failures = [], []
    for label, X, q in instances:
        n = X.degree
        if math.gcd(q, n) != 1 or not odd_order_check(q, n).passed:
            continue
        F = field_from_order(q)
        row = {'instance': label, 'q': q, 'degree': n}
        try:
            extended, report = extended_code(X, F, seed)
            C, lam = recover_hull_code(extended, n)
            row.update(dim=extended.dim, lam=int(lam),
                       ok=(perp(extended) == extended and 2 * extended.dim == n + 1
                           and C == report.codes['hull']))
        except SelfDualError as exc:
            row.update(ok=isinstance(exc, NoSquareRoot), error=type(exc).__name__)
        rows.append(row)
        if not row['ok']:
            failures.append(row)
    return _summary('extend', rows, failures)


SUITES = {
    'theorem2': run_theorem2_suite,
    'theorem3': run_theorem3_suite,
    'lemma7': run_lemma7_suite,
    'lemma6': run_lemma6_suite,
    'extend': run_extension_suite,
}


def run_all():
    """Run every sweep with its defaults."""
    results = {name: suite() for name, suite in SUITES.items()}
    failed = [name for name, result in results.items() if result['status'] != 'ok']
    return {
        'status': 'error' if failed else 'ok',
        'details': '; '.join(result['details'] for result in results.values()),
        'results': results,
    }
