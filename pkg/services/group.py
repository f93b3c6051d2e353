"""
Self-Dual Codes - Permutation Group Service
============================================
Finite permutation groups (fully enumerated), G-sets, orbits and
stabilizers, minimal normal subgroups, products AH, coset transversals and
induced G-sets.

Permutations compose right to left: (g * h)(x) = g(h(x)).
"""

import logging
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import sympy.combinatorics as comb

from config import get_config
from exceptions import (
    InvalidPermutation, NotElementaryAbelian, NotNormal, NotOddOrder,
    NotSubgroup, OrderCapExceeded, ValidationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of {0..n-1}; ``images[i]`` is the image of i."""
    images: tuple

    @classmethod
    def make(cls, images, degree=None):
        images = tuple(int(i) for i in images)
        n = len(images) if degree is None else degree
        if len(images) != n or sorted(images) != list(range(n)):
            raise InvalidPermutation(f'{list(images)} is not a bijection on {{0..{n - 1}}}',
                                     images=list(images))
        return cls(images)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def from_sympy(cls, perm, degree):
        images = list(perm.array_form) + list(range(perm.size, degree))
        return cls(tuple(images[:degree]))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        return Perm(tuple(self.images[i] for i in other.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def conjugate(self, by):
        """by * self * by^-1."""
        return by * self * by.inverse()

    @property
    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def order(self):
        seen, result = set(), 1
        for start in range(self.degree):
            if start in seen:
                continue
            length, x = 0, start
            while x not in seen:
                seen.add(x)
                x = self.images[x]
                length += 1
            result = math.lcm(result, length)
        return result

    def to_sympy(self):
        return comb.Permutation(list(self.images))

    def __repr__(self):
        return f'Perm({list(self.images)})'


class PermGroup:
    """A finite permutation group with its full, sorted element list.

    ``tree`` records how every element was first reached from the identity:
    element -> (parent, generator index) with element = generators[i] * parent,
    listed parents first.
    """

    def __init__(self, degree, generators, tree):
        self.degree = degree
        self.generators = tuple(generators)
        self.tree = tree
        self.elements = tuple(sorted(tree))
        self._index = {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return Perm.identity(self.degree)

    def __contains__(self, g):
        return g in self._index

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def index(self, g):
        return self._index[g]

    def element_set(self):
        return frozenset(self.elements)

    def is_subgroup_of(self, other):
        return self.degree == other.degree and all(g in other for g in self.elements)

    def same_elements(self, other):
        return self.degree == other.degree and self.elements == other.elements

    @cached_property
    def sympy(self):
        gens = [g.to_sympy() for g in self.generators] or [comb.Permutation(self.degree - 1)]
        return comb.PermutationGroup(gens)

    def is_abelian(self):
        return all(a * b == b * a for a in self.generators for b in self.generators)

    def exponent(self):
        return math.lcm(*(g.order() for g in self.elements))

    def __repr__(self):
        return f'PermGroup(degree={self.degree}, order={self.order})'


def group_make(n, gens, *, cap=None):
    """Enumerate the group generated by ``gens`` acting on n points."""
    gens = [g if isinstance(g, Perm) else Perm.make(g, n) for g in gens]
    for g in gens:
        if g.degree != n:
            raise InvalidPermutation(f'{g} has degree {g.degree}, expected {n}')
    cap = cap or get_config().ORDER_CAP
    if gens:
        order = int(comb.PermutationGroup([g.to_sympy() for g in gens]).order())
        if order > cap:
            raise OrderCapExceeded(f'group order {order} exceeds cap {cap}', order=order, cap=cap)

    identity = Perm.identity(n)
    tree = {identity: (None, None)}
    queue = deque([identity])
    while queue:
        e = queue.popleft()
        for i, s in enumerate(gens):
            f = s * e
            if f not in tree:
                tree[f] = (e, i)
                queue.append(f)
    return PermGroup(n, gens, tree)


def subgroup_from_elements(degree, elements):
    """The subgroup with the given elements, on a small greedy generating set."""
    gens, current = [], {Perm.identity(degree)}
    for g in sorted(elements):
        if g not in current:
            gens.append(g)
            current = group_make(degree, gens).element_set()
    group = group_make(degree, gens)
    if group.element_set() != frozenset(elements):
        raise NotSubgroup('element set is not closed under products')
    return group


# ---------------------------------------------------------------------------
# G-sets
# ---------------------------------------------------------------------------

class GSet:
    """A finite set {0..degree-1} with an action of ``group``.

    ``images`` maps every group element to the permutation it induces.
    """

    def __init__(self, group, degree, images):
        self.group = group
        self.degree = degree
        self.images = images

    @classmethod
    def natural(cls, group):
        return cls(group, group.degree, {g: g for g in group.elements})

    def act(self, g, x):
        return self.images[g].images[x]

    @property
    def gen_images(self):
        return tuple(self.images[s] for s in self.group.generators)

    @cached_property
    def orbits(self):
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for image in self.gen_images:
            for x, y in enumerate(image.images):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        groups = {}
        for x in range(self.degree):
            groups.setdefault(find(x), []).append(x)
        return sorted(groups.values())

    def orbit(self, x):
        return next(o for o in self.orbits if x in o)

    @property
    def is_transitive(self):
        return len(self.orbits) == 1

    def __repr__(self):
        return f'GSet(degree={self.degree}, group order={self.group.order})'


def gset_make(group, degree, gen_images):
    """Extend generator images to every element and check it is an action."""
    gen_images = [g if isinstance(g, Perm) else Perm.make(g, degree) for g in gen_images]
    if len(gen_images) != len(group.generators):
        raise ValidationError('one image per generator is required', rule='action-generators')
    for image in gen_images:
        if image.degree != degree:
            raise InvalidPermutation(f'{image} has degree {image.degree}, expected {degree}')

    images = {}
    for e, (parent, i) in group.tree.items():
        images[e] = Perm.identity(degree) if parent is None else gen_images[i] * images[parent]
    # (g g')x = g(g'x) on every edge of the Cayley graph, not just the tree
    for e in group.elements:
        for i, s in enumerate(group.generators):
            if images[s * e] != gen_images[i] * images[e]:
                raise ValidationError('generator images do not define an action',
                                      rule='action-homomorphism')
    return GSet(group, degree, images)


def image_group(X):
    """The image of X.group in Sym(X), acting naturally."""
    group = group_make(X.degree, list(X.gen_images))
    return group, GSet.natural(group)


def stabilizer(X, x):
    """{g in G : g x = x}."""
    if not 0 <= x < X.degree:
        raise ValidationError(f'point {x} not in 0..{X.degree - 1}', rule='point-range')
    fixing = [g for g in X.group.elements if X.act(g, x) == x]
    return subgroup_from_elements(X.group.degree, fixing)


def restrict_gset(X, H, points):
    """Restrict X to the subgroup H on the H-invariant set ``points``, relabelled in order."""
    points = sorted(points)
    label = {x: i for i, x in enumerate(points)}
    gen_images = []
    for h in H.generators:
        try:
            gen_images.append(Perm(tuple(label[X.act(h, x)] for x in points)))
        except KeyError:
            raise ValidationError('point set is not invariant under the subgroup',
                                  rule='restrict-invariant') from None
    return gset_make(H, len(points), gen_images)


def disjoint_union(X, Y):
    """X and Y side by side; Y's points are shifted by X.degree."""
    if not X.group.same_elements(Y.group) or X.group.generators != Y.group.generators:
        raise ValidationError('union of actions of different groups', rule='union-group')
    shift = X.degree
    gen_images = [Perm(a.images + tuple(shift + y for y in b.images))
                  for a, b in zip(X.gen_images, Y.gen_images)]
    return gset_make(X.group, X.degree + Y.degree, gen_images)


def trivial_gset(group):
    return gset_make(group, 1, [Perm.identity(1)] * len(group.generators))


# ---------------------------------------------------------------------------
# Normal structure
# ---------------------------------------------------------------------------

def is_normalized_by(A, H):
    elements = A.element_set()
    return all(a.conjugate(h) in elements for h in H.generators for a in A.generators)


def _smallest_prime(n):
    return next(p for p in range(2, n + 1) if n % p == 0)


def minimal_normal_subgroup(G):
    """A minimal normal subgroup of an odd-order group, checked elementary abelian.

    Normal closures of prime-order elements are compared by inclusion; among
    the minimal ones the smallest prime wins, then the least element list.
    """
    if G.order % 2 == 0:
        raise NotOddOrder(f'group of order {G.order} is not of odd order', order=G.order)
    if G.order == 1:
        raise ValidationError('the trivial group has no minimal normal subgroup',
                              rule='nontrivial-group')

    seen, closures = set(), {}
    for g in G.elements:
        k = g.order()
        if g in seen or k == 1 or _smallest_prime(k) != k:
            continue
        seen.update(g.conjugate(h) for h in G.elements)
        closure = G.sympy.normal_closure(g.to_sympy())
        N = group_make(G.degree, [Perm.from_sympy(p, G.degree) for p in closure.generators])
        closures.setdefault(N.element_set(), N)

    minimal = [N for key, N in closures.items()
               if not any(other < key for other in closures)]
    A = min(minimal, key=lambda N: (_smallest_prime(N.order), N.elements))
    p = _smallest_prime(A.order)
    if not A.sympy.is_elementary(p):
        raise NotElementaryAbelian(f'minimal normal subgroup of order {A.order} is not '
                                   f'elementary abelian', order=A.order)
    logger.debug('Minimal normal subgroup of %r: order %d (p=%d)', G, A.order, p)
    return A


def product_subgroup(A, H):
    """The subgroup AH for A normalized by H."""
    if A.degree != H.degree:
        raise ValidationError('groups act on different degrees', rule='same-degree')
    if not is_normalized_by(A, H):
        raise NotNormal('A is not normalized by H')
    AH = group_make(A.degree, list(A.generators) + list(H.generators))
    meet = len(A.element_set() & H.element_set())
    if AH.order * meet != A.order * H.order:
        raise NotNormal(f'|AH| = {AH.order} but |A||H|/|A^H| = {A.order * H.order // meet}')
    return AH


# ---------------------------------------------------------------------------
# Cosets and induction
# ---------------------------------------------------------------------------

@dataclass
class InducedGSet:
    """Ind_H^G(Y) with points labelled t * |Y| + y for the t-th transversal element."""
    gset: GSet
    transversal: list
    blocks: list
    block_size: int

    def point(self, t_index, y):
        return t_index * self.block_size + y


def left_transversal(G, H):
    """Least element of each left coset tH, in ascending order, and the coset lookup."""
    transversal, coset_of = [], {}
    for g in G.elements:
        if g in coset_of:
            continue
        index = len(transversal)
        transversal.append(g)
        for h in H.elements:
            coset_of[g * h] = index
    return transversal, coset_of


def induced_gset(G, H, Y):
    """The induced G-set Ind_H^G(Y) = union of t (x) Y, with g(t (x) y) = t_g (x) (t_g^-1 g t) y."""
    if not H.is_subgroup_of(G):
        raise NotSubgroup(f'{H!r} is not a subgroup of {G!r}')
    if not Y.group.same_elements(H):
        raise ValidationError('Y must be a G-set of the subgroup H', rule='induced-base')
    transversal, coset_of = left_transversal(G, H)
    size = Y.degree

    gen_images = []
    for s in G.generators:
        images = [0] * (len(transversal) * size)
        for i, t in enumerate(transversal):
            st = s * t
            j = coset_of[st]
            h = transversal[j].inverse() * st
            for y in range(size):
                images[i * size + y] = j * size + Y.act(h, y)
        gen_images.append(Perm(tuple(images)))

    blocks = [list(range(i * size, (i + 1) * size)) for i in range(len(transversal))]
    X = gset_make(G, len(transversal) * size, gen_images)
    return InducedGSet(gset=X, transversal=transversal, blocks=blocks, block_size=size)


def coset_gset(G, H):
    """G acting on its left cosets of H."""
    return induced_gset(G, H, trivial_gset(H)).gset


def subgroups(G, *, max_generators=2, up_to_conjugacy=False):
    """Subgroups generated by at most ``max_generators`` elements, ordered by (order, elements)."""
    found = {}
    elements = G.elements
    candidates = [[g] for g in elements]
    if max_generators >= 2:
        candidates += [[a, b] for i, a in enumerate(elements) for b in elements[i + 1:]]
    for gens in candidates:
        H = group_make(G.degree, gens)
        key = H.element_set()
        if key in found:
            continue
        if up_to_conjugacy:
            conjugates = {frozenset(h.conjugate(g) for h in H.elements) for g in elements}
            if any(c in found for c in conjugates):
                continue
        found[key] = H
    return sorted(found.values(), key=lambda H: (H.order, H.elements))
