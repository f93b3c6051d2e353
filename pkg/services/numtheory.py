"""
Self-Dual Codes - Number Theory Service
========================================
Integer-side criteria: factorization, multiplicative orders, and the
odd-order test that decides when q has odd order modulo n.
"""

import logging
import math
from dataclasses import dataclass, field

import galois
from sympy.ntheory import reduced_totient

from exceptions import InternalError, NotCoprime, ValidationError

logger = logging.getLogger(__name__)

MAX_MODULUS = 2 ** 32
ITERATION_LIMIT = 10 ** 3


@dataclass(frozen=True)
class OrderWitness:
    """Order of ``base`` in (Z/modulus)^x together with the per-prime orders."""
    modulus: int
    base: int
    order: int
    per_prime: list = field(default_factory=list)
    passed: bool = False

    @property
    def verdict(self):
        return 'pass' if self.passed else 'fail'

    def as_dict(self):
        return {
            'modulus': self.modulus,
            'base': self.base,
            'order': self.order,
            'per_prime': [{'prime': p, 'order': k} for p, k in self.per_prime],
            'verdict': self.verdict,
        }


def factorize(n):
    """Return the prime factorization of ``n`` as ascending ``(prime, exponent)`` pairs."""
    if not 1 <= n <= MAX_MODULUS:
        raise ValidationError(f'n={n} outside [1, 2^32]', rule='factorize-range')
    if n == 1:
        return []
    primes, exponents = galois.factors(n)
    return sorted(zip((int(p) for p in primes), (int(e) for e in exponents)))


def _order_by_iteration(q, n):
    value, k = q % n, 1
    while value != 1:
        value = (value * q) % n
        k += 1
    return k


def _order_by_carmichael(q, n):
    order = int(reduced_totient(n))
    for p, _ in factorize(order) if order > 1 else []:
        while order % p == 0 and pow(q, order // p, n) == 1:
            order //= p
    return order


def mult_order(q, n, *, method='auto'):
    """Least k >= 1 with q^k = 1 (mod n).

    ``method`` is ``'carmichael'`` (descend from the Carmichael exponent),
    ``'iterate'`` (walk the powers) or ``'auto'``.
    """
    if n < 1:
        raise ValidationError(f'modulus {n} must be positive', rule='mult-order-modulus')
    if math.gcd(q, n) != 1:
        raise NotCoprime(f'gcd({q}, {n}) = {math.gcd(q, n)}', q=q, n=n)
    if n == 1:
        return 1
    q %= n
    if method == 'iterate' or (method == 'auto' and n < ITERATION_LIMIT):
        return _order_by_iteration(q, n)
    return _order_by_carmichael(q, n)


def odd_order_check(q, n):
    """Decide whether q has odd order in (Z/n)^x and record every prime divisor's order.

    For odd n the global verdict and the all-primes verdict must agree; a
    disagreement is reported as an internal error.
    """
    order = mult_order(q, n)
    per_prime = [(p, mult_order(q, p)) for p, _ in factorize(n)]
    passed = order % 2 == 1
    if n % 2 == 1 and passed != all(k % 2 == 1 for _, k in per_prime):
        raise InternalError(
            f'order of {q} mod {n} is {order} but per-prime orders are {per_prime}',
            q=q, n=n,
        )
    witness = OrderWitness(modulus=n, base=q, order=order, per_prime=per_prime, passed=passed)
    logger.debug('odd_order_check(%d, %d) -> %s (order %d)', q, n, witness.verdict, order)
    return witness
