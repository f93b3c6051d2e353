import numpy as np
import pytest

from exceptions import (
    NotCoprime, NotIrreducible, NotSubmodule, ValidationError, VectorOutsideCarrier,
)
from services.gf import field_make
from services.group import GSet, trivial_gset
from services.linalg import Subspace
from services.modrep import (
    FGModule, decompose, dual_module, find_submodule, hom_space, homogeneous_decomposition,
    invariant_complement, is_irreducible, iso_test, multiplicity, permutation_matrix,
    permutation_module, self_dual_test, spin,
)


def rows(GF, values):
    values = GF(values)
    return Subspace.span(GF, values, values.shape[-1])


@pytest.fixture
def trivial_module(z3, gf2):
    return permutation_module(trivial_gset(z3), gf2)


@pytest.fixture
def z7_factors(f2z7):
    return decompose(f2z7, seed=0)


def test_permutation_module(trivial_module, f2z3, z3_regular):
    assert trivial_module.dim == 1 and trivial_module.is_trivial
    assert f2z3.dim == 3
    assert np.array_equal(f2z3.gens[0], permutation_matrix(f2z3.GF, z3_regular.gen_images[0]))
    assert f2z3.form.is_standard
    with pytest.raises(NotCoprime):
        permutation_module(z3_regular, field_make(3))


def test_from_matrices_checks_relations(z3, gf2):
    swap = gf2.GF([[0, 1], [1, 0]])
    with pytest.raises(ValidationError):
        FGModule.from_matrices(gf2, z3, [swap])


def test_spin(f2z3):
    GF = f2z3.GF
    assert spin(f2z3, [0, 0, 0]).dim == 0
    fixed = spin(f2z3, [1, 1, 1])
    assert fixed.dim == 1 and fixed.is_trivial
    assert spin(f2z3, [1, 1, 0]).carrier == rows(GF, [[1, 1, 0], [0, 1, 1]])


def test_submodule_and_coordinates(f2z3):
    GF = f2z3.GF
    with pytest.raises(NotSubmodule):
        f2z3.submodule(rows(GF, [[1, 0, 0]]))
    W = spin(f2z3, [1, 1, 0])
    with pytest.raises(VectorOutsideCarrier):
        W.coordinates([1, 1, 1])
    assert np.array_equal(W.coordinates([1, 0, 1]), GF([[1, 0]]))


def test_invariant_complement(f2z3):
    GF = f2z3.GF
    assert invariant_complement(f2z3, f2z3.carrier).dim == 0
    assert invariant_complement(f2z3, Subspace.zero(GF, 3)).carrier == f2z3.carrier
    complement = invariant_complement(f2z3, rows(GF, [[1, 1, 1]]))
    assert complement.carrier == rows(GF, [[1, 1, 0], [0, 1, 1]])


def test_decompose(f2z3, trivial_module, z7_factors):
    assert [W.dim for W in decompose(f2z3, seed=0)] == [1, 2]
    assert [W.dim for W in z7_factors] == [1, 3, 3]
    assert [W.dim for W in decompose(trivial_module)] == [1]
    assert all(is_irreducible(W) for W in z7_factors)


def test_decompose_is_seed_independent_up_to_dims(f2z7):
    for seed in range(4):
        assert sorted(W.dim for W in decompose(f2z7, seed=seed)) == [1, 3, 3]


def test_find_submodule_of_the_regular_module(f2z7):
    S = find_submodule(f2z7, np.random.default_rng(1))
    assert S is not None and 0 < S.dim < 7
    assert f2z7.is_stable(f2z7.lift(S))


def test_iso_test(f2z3, trivial_module, z7_factors):
    W = decompose(f2z3, seed=0)[1]
    assert iso_test(W, W) is not None
    assert iso_test(trivial_module, W) is None
    _, left, right = z7_factors
    assert iso_test(left, right) is None
    with pytest.raises(NotIrreducible):
        iso_test(f2z3, f2z3)


def test_hom_space_intertwines(z7_factors):
    left = z7_factors[1]
    T = hom_space(left, left).basis[0].reshape(3, 3)
    for R in left.reps:
        assert np.array_equal(R @ T, T @ R)


def test_dual_module(trivial_module, z7_factors):
    assert dual_module(trivial_module).is_trivial
    _, left, right = z7_factors
    dual = dual_module(left)
    assert iso_test(dual, right) is not None
    assert iso_test(dual, left) is None


def test_dual_of_a_permutation_module_is_itself(f2z7):
    assert iso_test(dual_module(f2z7), f2z7, check=False) is not None


def test_self_dual_test(f2z3, trivial_module, z7_factors):
    assert np.array_equal(self_dual_test(trivial_module), trivial_module.GF([[1]]))
    W = decompose(f2z3, seed=0)[1]
    gram = self_dual_test(W)
    assert gram is not None and np.array_equal(gram, gram.T)
    for R in W.reps:
        assert np.array_equal(R @ gram @ R.T, gram)
    assert self_dual_test(z7_factors[1]) is None


def test_homogeneous_decomposition_of_two_orbits(z3_two_orbits, gf2):
    V = permutation_module(z3_two_orbits, gf2)
    decomposition = homogeneous_decomposition(V, seed=0)
    summary = [(c.dim, c.multiplicity, c.self_dual) for c in decomposition.components]
    assert summary == [(1, 2, True), (2, 2, True)]
    assert decomposition.odd_self_dual() == []
    assert [c.label for c in decomposition.components] == ['dim1#0', 'dim2#0']
    trivial = decomposition.components[0]
    assert multiplicity(trivial.sample, V) == 2
    assert trivial.component.dim == 2


def test_homogeneous_decomposition_of_z7(f2z7):
    decomposition = homogeneous_decomposition(f2z7, seed=0)
    summary = [(c.label, c.multiplicity, c.self_dual) for c in decomposition.components]
    assert summary == [('dim1#0', 1, True), ('dim3#0', 1, False), ('dim3#1', 1, False)]
    assert [c.label for c in decomposition.odd_self_dual()] == ['dim1#0']
    assert decomposition.components[0].as_dict()['trivial'] is True


def test_homogeneous_labels_do_not_depend_on_the_seed(f2z7):
    labels = {tuple((c.label, c.sample.carrier) for c in homogeneous_decomposition(f2z7, s).components)
              for s in range(3)}
    assert len(labels) == 1


def test_trivial_module_decomposition(trivial_module):
    decomposition = homogeneous_decomposition(trivial_module)
    assert [(c.multiplicity, c.self_dual) for c in decomposition.components] == [(1, True)]


@pytest.fixture
def two_orbits_module(z3_two_orbits, gf2):
    return permutation_module(z3_two_orbits, gf2)


@pytest.fixture
def doubled_plane(two_orbits_module):
    """Two copies of the 2-dimensional irreducible of F2[Z3]."""
    GF = two_orbits_module.GF
    carrier = rows(GF, [[1, 1, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0],
                        [0, 0, 0, 1, 1, 0], [0, 0, 0, 0, 1, 1]])
    return two_orbits_module.submodule(carrier)


@pytest.mark.parametrize('seed', [0, 1, 2, 3])
def test_decompose_splits_repeated_factors(doubled_plane, seed):
    pieces = decompose(doubled_plane, seed=seed)
    assert [W.dim for W in pieces] == [2, 2]
    assert iso_test(pieces[0], pieces[1]) is not None


def test_find_submodule_of_a_homogeneous_module(doubled_plane):
    S = find_submodule(doubled_plane, np.random.default_rng(0))
    assert S is not None and S.dim == 2
    assert doubled_plane.is_stable(doubled_plane.lift(S))


def test_decompose_two_orbits(two_orbits_module):
    pieces = decompose(two_orbits_module, seed=0)
    assert sorted(W.dim for W in pieces) == [1, 1, 2, 2]
    assert all(is_irreducible(W) for W in pieces)


def test_dual_of_the_dual_is_isomorphic(f2z3, z7_factors):
    for W in decompose(f2z3, seed=0) + z7_factors:
        assert iso_test(dual_module(dual_module(W)), W) is not None


def test_self_dual_exactly_when_isomorphic_to_the_dual(f2z3, z7_factors):
    for W in decompose(f2z3, seed=0) + z7_factors:
        assert (self_dual_test(W) is not None) == (iso_test(W, dual_module(W)) is not None)


@pytest.mark.parametrize('group', ['z3', 'z7', 'f21'])
def test_trivial_factor_occurs_once_in_a_transitive_module(group, request, gf2):
    G = request.getfixturevalue(group)
    V = permutation_module(GSet.natural(G), gf2)
    trivial = permutation_module(trivial_gset(G), gf2)
    assert multiplicity(trivial, V) == 1
