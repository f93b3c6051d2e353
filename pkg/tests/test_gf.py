import galois
import numpy as np
import pytest

from exceptions import DivisionByZero, NotPrime, TooLarge, ValidationError
from services.gf import (
    arith, cyclotomic_residues, extension_make, field_from_order, field_label, field_make,
    field_of, sqrt,
)


def test_field_make_small_fields(gf2, gf4, gf41):
    assert (gf2.order, gf4.order, gf41.order) == (2, 4, 41)
    assert gf4.characteristic == 2
    assert field_make(2, 2) is gf4
    assert field_from_order(4) == gf4
    assert field_of(gf4.one) is gf4


def test_gf4_modulus_is_x2_x_1(gf4):
    omega = gf4(2)
    assert omega ** 2 == omega + gf4(1)
    assert [int(c) for c in gf4.modulus.coeffs] == [1, 1, 1]


@pytest.mark.parametrize('p, m, error', [(4, 1, NotPrime), (2, 30, TooLarge), (2, 0, ValidationError)])
def test_field_make_rejects(p, m, error):
    with pytest.raises(error):
        field_make(p, m)


def test_field_from_order_rejects_non_prime_power():
    with pytest.raises(NotPrime):
        field_from_order(6)


def test_arith(gf4, gf41):
    omega = gf4(2)
    assert arith(omega, omega, 'mul') == gf4(3)
    assert arith(omega, omega, 'add') == 0
    assert arith(gf41(6), op='inv') == 7
    assert arith(gf41(5), op='neg') == 36


def test_arith_division_by_zero(gf41):
    with pytest.raises(DivisionByZero):
        arith(gf41(3), gf41(0), 'div')
    with pytest.raises(ZeroDivisionError):
        arith(gf41(0), op='inv')


def test_sqrt(gf4, gf41):
    assert sqrt(gf4(2)) == gf4(3)
    assert sqrt(gf41(36)) == 6
    assert sqrt(gf41(0)) == 0
    assert sqrt(field_make(11)(6)) is None


def test_sqrt_large_odd_field():
    F = field_make(8191)
    root = sqrt(F(4))
    assert int(root) == 2
    assert root ** 2 == F(4)


def test_sqrt_large_field_returns_a_field_element():
    F = field_make(4099)
    root = sqrt(F(5))
    assert isinstance(root, galois.FieldArray)
    assert root ** 2 == F(5)
    assert int(root) < int(-root)


def test_scalar_reduces_mod_p(gf4, gf41):
    assert gf4.scalar(-7) == 1
    assert gf41.scalar(-5) == 36


def test_extension_gf8_over_gf2(gf2):
    ext = extension_make(gf2, 3)
    assert ext.field.order == 8
    power = np.arange(8)
    for _ in range(3):
        power = ext.frobenius[power]
    assert np.array_equal(power, np.arange(8))
    assert not np.array_equal(ext.frobenius, np.arange(8))


def test_extension_degree_one_is_identity(gf2):
    ext = extension_make(gf2, 1)
    assert ext.field.order == 2
    assert np.array_equal(ext.frobenius, np.arange(2))


def test_extension_gf64_fixes_gf4(gf4):
    ext = extension_make(gf4, 3)
    assert ext.field.order == 64
    assert len(ext.fixed_points()) == 4
    assert sorted(ext.embedding.tolist()) == sorted(ext.fixed_points().tolist())


def test_is_rational(gf2, gf4):
    ext = extension_make(gf2, 2)
    E = ext.field.GF
    assert np.array_equal(ext.is_rational(E.Zeros(3)), gf2.GF.Zeros(3))
    assert np.array_equal(ext.is_rational(ext.embed(gf2.GF([1, 0, 1]))), gf2.GF([1, 0, 1]))
    assert ext.is_rational(E([1, 2])) is None

    over_gf4 = extension_make(gf4, 2)
    values = gf4.GF([0, 1, 2, 3])
    assert np.array_equal(over_gf4.is_rational(over_gf4.embed(values)), values)


def test_cyclotomic_residues(gf2, gf4):
    modulus, residues = cyclotomic_residues(gf2, 7)
    assert modulus.degree == 3 and residues.shape == (7, 3)
    assert [int(c) for c in residues[0]] == [1, 0, 0]
    assert [int(c) for c in residues[1]] == [0, 1, 0]

    modulus, residues = cyclotomic_residues(gf4, 23)
    assert modulus.degree == 11 and residues.shape == (23, 11)
    x, one = galois.Poly.Identity(gf4.GF), galois.Poly.One(gf4.GF)
    assert (x ** 23 - one) % modulus == galois.Poly.Zero(gf4.GF)

    _, residues = cyclotomic_residues(field_make(41), 5)
    assert residues.shape == (5, 1)
    xi = residues[1, 0]
    assert xi ** 5 == 1 and xi != 1

    with pytest.raises(ValidationError):
        cyclotomic_residues(gf2, 6)


def test_field_label(gf4, gf41):
    assert field_label(gf4) == '2^2'
    assert field_label(gf41) == '41^1'


@pytest.mark.parametrize('p, m', [(2, 1), (2, 2), (3, 2), (2, 3), (41, 1), (8191, 1)])
def test_field_axioms_on_random_elements(p, m):
    F = field_make(p, m)
    rng = np.random.default_rng(p * 10 + m)
    a, b, c = (F.GF.Random(64, seed=rng) for _ in range(3))
    zero, one = F.zero, F.one
    assert np.array_equal(a + b, b + a) and np.array_equal(a * b, b * a)
    assert np.array_equal((a + b) + c, a + (b + c))
    assert np.array_equal((a * b) * c, a * (b * c))
    assert np.array_equal(a * (b + c), a * b + a * c)
    assert np.array_equal(a + zero, a) and np.array_equal(a * one, a)
    assert not np.any((a + (-a)).view(np.ndarray))
    nonzero = a[a != 0]
    assert np.all(nonzero * nonzero ** -1 == one)


@pytest.mark.parametrize('p, m', [(2, 3), (3, 2), (2, 4)])
def test_frobenius_is_a_field_automorphism(p, m):
    F = field_make(p, m)
    rng = np.random.default_rng(m)
    a, b = F.GF.Random(64, seed=rng), F.GF.Random(64, seed=rng)
    assert np.array_equal(F.frobenius(a + b), F.frobenius(a) + F.frobenius(b))
    assert np.array_equal(F.frobenius(a * b), F.frobenius(a) * F.frobenius(b))
    power = F.elements()
    for _ in range(m):
        power = F.frobenius(power)
    assert np.array_equal(power, F.elements())
