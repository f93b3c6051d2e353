"""
Self-Dual Codes - Finite Field Service
=======================================
Field contexts for GF(p^m) on top of ``galois`` FieldArray classes, square
roots, and extension fields GF(q^d) with an explicit embedding of the base
field and the Frobenius x -> x^q used for rationality checks.

Elements are ``galois`` scalars; their integer value is the base-p,
little-endian encoding of the coefficient vector, which is also how they
are written in every text format.
"""

import logging
import math
from functools import lru_cache

import galois
import numpy as np

from config import get_config
from exceptions import DivisionByZero, InternalError, NotPrime, TooLarge, ValidationError

logger = logging.getLogger(__name__)

EXHAUSTIVE_SQRT_LIMIT = 2 ** 12

# galois FieldArray class -> FiniteField
_REGISTRY = {}


class FiniteField:
    """Arithmetic context for GF(p^m) with a fixed modulus."""

    def __init__(self, p, m, modulus, GF):
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = modulus
        self.GF = GF

    # -- constructors -------------------------------------------------------

    def __call__(self, value):
        return self.GF(value)

    def zeros(self, shape):
        return self.GF.Zeros(shape)

    def identity(self, n):
        return self.GF.Identity(n)

    @property
    def zero(self):
        return self.GF(0)

    @property
    def one(self):
        return self.GF(1)

    @property
    def characteristic(self):
        return self.p

    def scalar(self, integer):
        """The image of an integer under Z -> GF(p) -> GF(q)."""
        return self.GF(integer % self.p)

    def frobenius(self, a):
        return a ** self.p

    def elements(self):
        return self.GF.elements

    def __repr__(self):
        return f'GF({self.order})'

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self.GF is other.GF

    def __hash__(self):
        return hash((self.p, self.m, tuple(int(c) for c in self.modulus.coeffs)))


def field_of(array):
    """The FiniteField owning a galois array or scalar."""
    try:
        return _REGISTRY[type(array)]
    except KeyError:
        raise ValidationError(f'{type(array).__name__} is not a registered field',
                              rule='field-owner') from None


@lru_cache(maxsize=None)
def field_make(p, m=1, *, max_order=None):
    """Build GF(p^m) with the lexicographically least irreducible modulus."""
    if not galois.is_prime(p):
        raise NotPrime(f'{p} is not prime', p=p)
    if m < 1:
        raise ValidationError(f'degree {m} must be positive', rule='field-degree')
    cap = max_order or get_config().MAX_FIELD_ORDER
    if p ** m > cap:
        raise TooLarge(f'GF({p}^{m}) exceeds the field cap {cap}', order=p ** m, cap=cap)

    if m == 1:
        GF = galois.GF(p)
        modulus = GF.irreducible_poly
    else:
        modulus = galois.irreducible_poly(p, m, method='min')
        GF = galois.GF(p ** m, irreducible_poly=modulus)
    # the multiplicative group must be cyclic of order q-1
    generator = GF.primitive_element
    for r, _ in _prime_divisors(p ** m - 1):
        if generator ** ((p ** m - 1) // r) == 1:
            raise InternalError(f'{GF.name} primitive element has order < q-1')
    field = FiniteField(p, m, modulus, GF)
    _REGISTRY[GF] = field
    logger.debug('Built %r with modulus %s', field, modulus)
    return field


def field_from_order(q):
    """Build GF(q) from its order q = p^m."""
    factors = galois.factors(q) if q > 1 else ([], [])
    if len(factors[0]) != 1:
        raise NotPrime(f'{q} is not a prime power', q=q)
    return field_make(int(factors[0][0]), int(factors[1][0]))


def _prime_divisors(n):
    if n < 2:
        return []
    primes, exponents = galois.factors(n)
    return list(zip(primes, exponents))


# ---------------------------------------------------------------------------
# Element arithmetic
# ---------------------------------------------------------------------------

def arith(a, b=None, op='add'):
    """Apply ``op`` in {add, sub, mul, div, inv, neg} to field elements."""
    if b is not None and type(a) is not type(b):
        raise ValidationError('operands belong to different fields', rule='same-field')
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'neg':
        return -a
    if op in ('inv', 'div'):
        divisor = a if op == 'inv' else b
        if divisor == 0:
            raise DivisionByZero('division by zero in ' + type(a).name)
        return divisor ** -1 if op == 'inv' else a / b
    raise ValidationError(f'unknown operation {op!r}', rule='field-op')


def sqrt(a):
    """A square root of ``a``, or None when ``a`` is a non-residue.

    In characteristic 2 the root is unique and equals a^(2^(m-1)). In odd
    characteristic the numerically smaller of the two roots is returned.
    """
    GF = type(a)
    p, m = GF.characteristic, GF.degree
    if p == 2:
        return a ** (2 ** (m - 1))
    if a == 0:
        return GF(0)
    if a ** ((GF.order - 1) // 2) != 1:
        return None
    if GF.order < EXHAUSTIVE_SQRT_LIMIT:
        elements = GF.elements
        return elements[elements ** 2 == a][0]
    root = np.sqrt(GF([int(a)]))[0]
    return min(root, -root, key=int)


# ---------------------------------------------------------------------------
# Extension fields
# ---------------------------------------------------------------------------

class ExtensionField:
    """E = GF(q^d) together with the embedding of F = GF(q) and gamma: x -> x^q."""

    def __init__(self, base, degree, field, embedding, frobenius):
        self.base = base
        self.degree = degree
        self.field = field
        self.embedding = embedding
        self.frobenius = frobenius
        self._section = {int(e): f for f, e in enumerate(embedding)}

    def embed(self, values):
        """Carry F-elements (scalar or array) into E."""
        ints = np.asarray(values.view(np.ndarray) if isinstance(values, galois.FieldArray)
                          else values, dtype=np.int64)
        return self.field.GF(self.embedding[ints])

    def gamma(self, values):
        ints = np.asarray(values.view(np.ndarray), dtype=np.int64)
        return self.field.GF(self.frobenius[ints])

    def fixed_points(self):
        return np.flatnonzero(self.frobenius == np.arange(self.field.order))

    def is_rational(self, vector):
        """Re-express a gamma-fixed E-vector over F, or return None."""
        ints = np.asarray(vector.view(np.ndarray), dtype=np.int64)
        if not np.array_equal(self.frobenius[ints], ints):
            return None
        return self.base.GF([self._section[int(x)] for x in ints.ravel()]).reshape(ints.shape)

    def __repr__(self):
        return f'{self.field!r} over {self.base!r}'


def extension_make(base, degree):
    """Build GF(q^d) over ``base`` with its embedding and Frobenius."""
    if degree < 1:
        raise ValidationError(f'extension degree {degree} must be positive', rule='extension-degree')
    q = base.order
    field = field_make(base.p, base.m * degree)

    if base.m == 1:
        embedding = np.arange(q, dtype=np.int64)
    else:
        lifted = galois.Poly(field.GF(base.modulus.coeffs.view(np.ndarray)), field=field.GF)
        root = min(lifted.roots(), key=int)
        powers = root ** np.arange(base.m)
        digits = np.array([[(a // base.p ** i) % base.p for i in range(base.m)]
                           for a in range(q)], dtype=np.int64)
        images = field.GF(digits) * powers
        embedding = np.asarray(np.add.reduce(images, axis=1).view(np.ndarray), dtype=np.int64)

    everything = field.GF.Range(0, field.order)
    frobenius = np.asarray((everything ** q).view(np.ndarray), dtype=np.int64)

    ext = ExtensionField(base, degree, field, embedding, frobenius)
    _check_extension(ext)
    logger.debug('Built extension %r (degree %d)', ext, degree)
    return ext


def _check_extension(ext):
    identity = np.arange(ext.field.order)
    power = identity
    for _ in range(ext.degree):
        power = ext.frobenius[power]
    if not np.array_equal(power, identity):
        raise InternalError(f'Frobenius of {ext!r} does not have order dividing {ext.degree}')
    fixed = ext.fixed_points()
    if len(fixed) != ext.base.order or set(fixed.tolist()) != set(ext.embedding.tolist()):
        raise InternalError(f'fixed field of {ext!r} is not the embedded base field')


def cyclotomic_residues(base, e):
    """The modulus g and the residues x^k mod g (0 <= k < e) over ``base``.

    g is the least irreducible factor of x^e - 1 whose roots have order
    exactly e, so F[x]/(g) is GF(q^d) with d = ord_e(q) and x is a primitive
    e-th root of unity in it. Row k holds the coefficients of x^k mod g,
    constant term first. Nothing of size q^d is tabulated.
    """
    GF = base.GF
    if e < 1 or math.gcd(e, base.order) != 1:
        raise ValidationError(f'{e} is not a positive integer coprime to {base.order}',
                              rule='root-of-unity')
    x, one, zero = galois.Poly.Identity(GF), galois.Poly.One(GF), galois.Poly.Zero(GF)
    factors, _ = (x ** e - one).factors()
    primes = [r for r, _ in _prime_divisors(e)]
    candidates = [g for g in factors
                  if all((x ** (e // r) - one) % g != zero for r in primes)]
    if not candidates:
        raise InternalError(f'x^{e} - 1 has no factor of exact order {e} over {base!r}')
    g = min(candidates, key=int)
    d = g.degree

    residues = GF.Zeros((e, d))
    power = one
    for k in range(e):
        residues[k] = power.coefficients(d, order='asc')
        power = (power * x) % g
    logger.debug('x^%d - 1 over %r: modulus %s of degree %d', e, base, g, d)
    return g, residues


def is_rational(vector, ext):
    return ext.is_rational(vector)


def field_label(field):
    """``p^m`` label used in problem files."""
    return f'{field.p}^{field.m}'
