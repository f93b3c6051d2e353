"""
Self-Dual Codes - Shared Constants
===================================
The built-in library of odd-order permutation groups and the default
parameters of the acceptance suites.
"""


def _cycle(m):
    return tuple((i + 1) % m for i in range(m))


def _heisenberg_generators():
    # points (a, b) of Z3 x Z3 stored as 3a + b
    def perm(f):
        return tuple(3 * a2 + b2 for a2, b2 in (f(a, b) for a in range(3) for b in range(3)))

    return [
        perm(lambda a, b: ((a + 1) % 3, b)),
        perm(lambda a, b: (a, (b + 1) % 3)),
        perm(lambda a, b: ((a + b) % 3, b)),
    ]


# name -> (degree, generator images)
GROUP_LIBRARY = {
    **{f'Z{m}': (m, [_cycle(m)]) for m in range(3, 28, 2)},
    'Z3xZ3': (6, [(1, 2, 0, 3, 4, 5), (0, 1, 2, 4, 5, 3)]),
    'F21': (7, [_cycle(7), tuple((2 * i) % 7 for i in range(7))]),
    'He3': (9, _heisenberg_generators()),
}

# Orders of the groups above, used as a sanity check when they are built
GROUP_ORDERS = {
    **{f'Z{m}': m for m in range(3, 28, 2)},
    'Z3xZ3': 9,
    'F21': 21,
    'He3': 27,
}

# Acceptance sweep defaults
THEOREM2_FIELDS = (2, 4)
THEOREM2_MAX_DEGREE = 14
THEOREM3_FIELDS = (2, 4, 8)
THEOREM3_TIME_LIMIT = 10.0
LEMMA7_INSTANCES = 200
LEMMA7_FIELDS = (2, 4)
LEMMA6_LIMIT = 10000
LEMMA6_BASES = (2, 3, 4, 5, 8, 9)
EXTENSION_FIELDS = (2, 4, 8)

# (group, field order) pairs checked by the extension sweep in odd characteristic
EXTENSION_ODD_INSTANCES = (('Z5', 41),)
