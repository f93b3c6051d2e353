import pytest

from exceptions import BudgetExceeded, DegreeMismatch, ValidationError, VerificationMismatch
from services.construct import extend_code, lemma8_code
from services.group import group_make
from services.linalg import Subspace
from services.modrep import permutation_module
from services.verify import (
    brute_force_search, check_construction, classify_hull, codewords, dual_code,
    invariance_check, minimum_distance, submodule_lattice, weight_distribution,
)


def span(GF, rows):
    rows = GF(rows)
    return Subspace.span(GF, rows, rows.shape[-1])


@pytest.fixture
def hamming8(z7_hull, gf2):
    extended, _ = extend_code(z7_hull, 7, gf2)
    return extended


def test_dual_code(hamming8, z3, gf2):
    GF = gf2.GF
    assert dual_code(hamming8) == hamming8
    assert dual_code(Subspace.zero(GF, 4)) == Subspace.full(GF, 4)
    assert dual_code(span(GF, [[1, 1, 1]]), group=z3) == span(GF, [[1, 1, 0], [0, 1, 1]])


def test_classify_hull(z7_hull, hamming8, gf2):
    GF = gf2.GF
    assert classify_hull(z7_hull).relation == 'hull_plus_e'
    assert classify_hull(hamming8).relation == 'self_dual'
    assert classify_hull(span(GF, [[1, 1, 0, 0]])).relation == 'self_orthogonal_other'
    assert classify_hull(span(GF, [[1, 0, 0], [0, 1, 1]])).relation == 'none'


def test_hull_report(z7_hull):
    report = classify_hull(z7_hull)
    assert report.hull == z7_hull
    assert report.as_dict() == {'relation': 'hull_plus_e', 'length': 7, 'dim': 3,
                                'dual_dim': 4, 'hull_dim': 3}


def test_classify_hull_rejects_zero_reference(gf2):
    with pytest.raises(ValidationError):
        classify_hull(Subspace.zero(gf2.GF, 3), e=[0, 0, 0])


def test_invariance_check(z3, gf2):
    GF = gf2.GF
    assert invariance_check(span(GF, [[1, 1, 1]]), z3)
    assert not invariance_check(span(GF, [[1, 0, 0], [0, 1, 0]]), z3)
    with pytest.raises(DegreeMismatch):
        invariance_check(Subspace.full(GF, 4), z3)


def test_weight_distribution(hamming8, z7_hull):
    assert weight_distribution(hamming8) == [1, 0, 0, 0, 14, 0, 0, 0, 1]
    assert minimum_distance(hamming8) == 4
    assert weight_distribution(z7_hull) == [1, 0, 0, 0, 7, 0, 0, 0]


def test_weight_distribution_over_gf4(gf4):
    assert weight_distribution(Subspace.full(gf4.GF, 2)) == [1, 6, 9]
    repetition = span(gf4.GF, [[1, 1, 1]])
    assert weight_distribution(repetition) == [1, 0, 0, 3]
    assert minimum_distance(repetition) == 3


def test_minimum_distance_of_zero_code(gf2):
    assert minimum_distance(Subspace.zero(gf2.GF, 5)) is None


def test_codewords_budget(gf2):
    with pytest.raises(BudgetExceeded):
        codewords(Subspace.full(gf2.GF, 10), budget=100)


def test_submodule_lattice(f2z3):
    lattice = submodule_lattice(f2z3)
    assert [U.dim for U in lattice] == [0, 1, 2, 3]


def test_brute_force_search(f2z3, z3_two_orbits, gf2):
    assert brute_force_search(f2z3) is None
    witness = brute_force_search(permutation_module(z3_two_orbits, gf2))
    assert witness.dim == 3 and classify_hull(witness).relation == 'self_dual'


def test_brute_force_search_hull_plus_e(f2z7, z7, gf2):
    witness = brute_force_search(f2z7, 'hull_plus_e')
    assert witness.dim == 3 and minimum_distance(witness) == 4
    C = lemma8_code(z7, group_make(7, []), gf2)
    mirrored = gf2.GF.Zeros((3, 7))
    mirrored[:, [(-i) % 7 for i in range(7)]] = C.basis
    assert witness in (C, Subspace.span(gf2.GF, mirrored, 7))


def test_brute_force_raw_matches_lattice(f2z3, z3_two_orbits, gf2):
    V = permutation_module(z3_two_orbits, gf2)
    assert brute_force_search(f2z3, method='raw') is None
    raw = brute_force_search(V, method='raw')
    assert raw.dim == 3 and V.is_stable(raw)


def test_brute_force_search_arguments(f2z3, f2z7):
    with pytest.raises(ValidationError):
        brute_force_search(f2z3, 'anything')
    with pytest.raises(ValidationError):
        brute_force_search(f2z7, 'hull_plus_e', method='raw')
    with pytest.raises(BudgetExceeded):
        brute_force_search(f2z7, budget=64)


def test_check_construction(z7_hull, z7, gf2):
    assert check_construction(z7_hull, z7, 'hull_plus_e').relation == 'hull_plus_e'
    with pytest.raises(VerificationMismatch):
        check_construction(z7_hull, z7, 'self_dual')
    moved = span(gf2.GF, [[1, 1, 0, 0, 0, 0, 0]])
    with pytest.raises(VerificationMismatch):
        check_construction(moved, z7, 'self_orthogonal_other')
