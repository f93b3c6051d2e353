import pytest

from constants import GROUP_LIBRARY, GROUP_ORDERS
from exceptions import (
    InvalidPermutation, NotNormal, NotOddOrder, NotSubgroup, OrderCapExceeded, ValidationError,
)
from services.group import (
    GSet, Perm, coset_gset, disjoint_union, group_make, gset_make, image_group, induced_gset,
    left_transversal, minimal_normal_subgroup, product_subgroup, restrict_gset, stabilizer,
    subgroup_from_elements, subgroups, trivial_gset,
)
from tests.conftest import CYCLE7


def test_perm_composition_is_right_to_left():
    g = Perm.make([1, 2, 0])
    h = Perm.make([0, 2, 1])
    assert (g * h)(1) == g(h(1))
    assert g * g.inverse() == Perm.identity(3)
    assert g.order() == 3


def test_perm_make_rejects_non_bijection():
    with pytest.raises(InvalidPermutation):
        Perm.make([0, 0, 1])


def test_group_make(z7, f21):
    assert z7.order == 7
    assert f21.order == 21
    assert group_make(5, []).order == 1
    assert z7.is_abelian() and not f21.is_abelian()
    assert f21.exponent() == 21


def test_group_make_respects_cap():
    with pytest.raises(OrderCapExceeded):
        group_make(7, [CYCLE7], cap=5)


def test_group_library_orders():
    for name, (degree, gens) in GROUP_LIBRARY.items():
        assert group_make(degree, gens).order == GROUP_ORDERS[name], name


def test_tree_reaches_every_element(f21):
    for element, (parent, i) in f21.tree.items():
        if parent is not None:
            assert f21.generators[i] * parent == element


def test_stabilizer(z7_regular, f21):
    assert stabilizer(z7_regular, 3).order == 1
    assert stabilizer(GSet.natural(f21), 0).order == 3
    assert stabilizer(trivial_gset(f21), 0).order == 21


def test_orbits_of_a_union(z3_two_orbits):
    assert z3_two_orbits.orbits == [[0, 1, 2], [3, 4, 5]]
    assert not z3_two_orbits.is_transitive


def test_gset_make_checks_the_action(z3):
    with pytest.raises(ValidationError):
        gset_make(z3, 2, [[1, 0]])


def test_minimal_normal_subgroup(z7, f21):
    assert minimal_normal_subgroup(z7).same_elements(z7)
    A = minimal_normal_subgroup(f21)
    assert A.order == 7 and A.is_subgroup_of(f21)

    z15 = group_make(15, [[(i + 1) % 15 for i in range(15)]])
    assert minimal_normal_subgroup(z15).order == 3


def test_minimal_normal_subgroup_needs_odd_order():
    with pytest.raises(NotOddOrder):
        minimal_normal_subgroup(group_make(2, [[1, 0]]))
    with pytest.raises(ValidationError):
        minimal_normal_subgroup(group_make(3, []))


def test_product_subgroup(f21):
    A = minimal_normal_subgroup(f21)
    G1 = stabilizer(GSet.natural(f21), 0)
    assert product_subgroup(A, G1).same_elements(f21)
    assert product_subgroup(A, group_make(7, [])).same_elements(A)
    with pytest.raises(NotNormal):
        product_subgroup(G1, A)


def test_subgroup_from_elements(f21):
    A = minimal_normal_subgroup(f21)
    again = subgroup_from_elements(7, A.elements)
    assert again.same_elements(A)
    with pytest.raises(NotSubgroup):
        subgroup_from_elements(7, [f21.generators[0], f21.identity])


def test_induced_from_whole_group_is_the_same_set(z3_regular, z3):
    induced = induced_gset(z3, z3, z3_regular)
    assert induced.gset.degree == 3 and len(induced.blocks) == 1
    assert induced.gset.gen_images == z3_regular.gen_images


def test_induced_from_trivial_subgroup_is_regular(f21):
    trivial = group_make(7, [])
    X = coset_gset(f21, trivial)
    assert X.degree == 21 and X.is_transitive
    assert all(stabilizer(X, x).order == 1 for x in (0, 5, 20))


def test_induced_blocks_are_permuted(f21):
    A = minimal_normal_subgroup(f21)
    Y = restrict_gset(GSet.natural(f21), A, range(7))
    induced = induced_gset(f21, A, Y)
    assert induced.gset.degree == 21
    assert len(induced.transversal) == 3
    assert induced.point(2, 4) == 18
    blocks = [set(b) for b in induced.blocks]
    for image in induced.gset.gen_images:
        for block in blocks:
            assert {image(x) for x in block} in blocks


def test_induced_needs_a_subgroup(f21):
    other = group_make(7, [[0, 2, 1, 3, 4, 5, 6]])
    with pytest.raises(NotSubgroup):
        induced_gset(f21, other, trivial_gset(other))


def test_left_transversal(f21):
    A = minimal_normal_subgroup(f21)
    transversal, coset_of = left_transversal(f21, A)
    assert len(transversal) == 3
    assert transversal == sorted(transversal)
    assert len(coset_of) == 21


def test_image_group_of_a_single_coset(f21):
    A = minimal_normal_subgroup(f21)
    X = coset_gset(f21, product_subgroup(A, stabilizer(GSet.natural(f21), 0)))
    image, natural = image_group(X)
    assert X.degree == 1 and image.order == 1 and natural.degree == 1


def test_coset_action_of_the_frobenius_group(f21):
    A = minimal_normal_subgroup(f21)
    X = coset_gset(f21, A)
    image, _ = image_group(X)
    assert X.degree == 3 and image.order == 3


def test_restrict_gset_needs_invariant_points(f21):
    A = minimal_normal_subgroup(f21)
    with pytest.raises(ValidationError):
        restrict_gset(GSet.natural(f21), A, [0, 1])


def test_disjoint_union_needs_one_group(z3_regular, z7_regular):
    with pytest.raises(ValidationError):
        disjoint_union(z3_regular, z7_regular)


def test_subgroups(f21):
    found = subgroups(f21)
    assert [H.order for H in found] == [1] + [3] * 7 + [7, 21]
    classes = subgroups(f21, up_to_conjugacy=True)
    assert [H.order for H in classes] == [1, 3, 7, 21]


@pytest.mark.parametrize('name', ['z3_regular', 'z7_regular', 'z3_two_orbits'])
def test_orbit_stabilizer_on_fixtures(name, request):
    X = request.getfixturevalue(name)
    for x in range(X.degree):
        assert len(X.orbit(x)) * stabilizer(X, x).order == X.group.order


def test_orbit_stabilizer_on_coset_actions(f21):
    gsets = [GSet.natural(f21), trivial_gset(f21)]
    gsets += [coset_gset(f21, H) for H in subgroups(f21, up_to_conjugacy=True)]
    gsets.append(disjoint_union(gsets[0], gsets[-1]))
    for X in gsets:
        assert sum(len(orbit) for orbit in X.orbits) == X.degree
        for x in range(X.degree):
            assert len(X.orbit(x)) * stabilizer(X, x).order == f21.order
