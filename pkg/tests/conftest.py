import os
import sys

import pytest

BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if BASE_DIR not in sys.path:
    sys.path.insert(0, BASE_DIR)

os.environ['ENVIRONMENT'] = 'testing'

from services.construct import theorem3_code
from services.gf import field_make
from services.group import GSet, disjoint_union, group_make
from services.modrep import permutation_module

SAMPLES = os.path.join(BASE_DIR, 'samples')

CYCLE3 = [1, 2, 0]
CYCLE7 = [1, 2, 3, 4, 5, 6, 0]
DOUBLING7 = [0, 2, 4, 6, 1, 3, 5]


def sample(name):
    return os.path.join(SAMPLES, name)


@pytest.fixture
def gf2():
    return field_make(2)


@pytest.fixture
def gf4():
    return field_make(2, 2)


@pytest.fixture
def gf41():
    return field_make(41)


@pytest.fixture
def z3():
    return group_make(3, [CYCLE3])


@pytest.fixture
def z7():
    return group_make(7, [CYCLE7])


@pytest.fixture
def f21():
    return group_make(7, [CYCLE7, DOUBLING7])


@pytest.fixture
def z3_regular(z3):
    return GSet.natural(z3)


@pytest.fixture
def z7_regular(z7):
    return GSet.natural(z7)


@pytest.fixture
def z3_two_orbits(z3_regular):
    return disjoint_union(z3_regular, z3_regular)


@pytest.fixture
def f2z3(z3_regular, gf2):
    return permutation_module(z3_regular, gf2)


@pytest.fixture
def f2z7(z7_regular, gf2):
    return permutation_module(z7_regular, gf2)


@pytest.fixture
def z7_hull(z7, z7_regular, gf2):
    C, _ = theorem3_code(z7, z7_regular, gf2, seed=0)
    return C
