# vim: ts=4:sw=4:expandtabs
"""
The in-repo bimonoid corpus. Every entry is validated by the bimonoid checker before it is
handed out.
"""

from functools import lru_cache
from itertools import permutations

from skewcat.tensor import GenSpace

from .Bimonoid import Bimonoid
from .conversions import validate_bimonoid


def monoid_algebra(name, elements, multiply, identity):
    """
    The bialgebra k[M] of a finite monoid: group-like basis, δ(m) = m⊗m, ε(m) = 1.
    """
    index = {m: i for i, m in enumerate(elements)}
    products = {
        (index[a], index[b]): {index[multiply(a, b)]: 1}
        for a in elements for b in elements
    }
    coproducts = {i: {(i, i): 1} for i in range(len(elements))}
    space = GenSpace(name, len(elements))
    return Bimonoid.from_tables(space, products, coproducts, [1] * len(elements), {index[identity]: 1}, name)


def cyclic_group_algebra(n):
    return monoid_algebra('k[Z/{0}]'.format(n), list(range(n)), lambda a, b: (a + b) % n, 0)


def symmetric_group_algebra():
    elements = list(permutations(range(3)))

    def multiply(p, q):
        return tuple(p[q[i]] for i in range(3))

    return monoid_algebra('k[S3]', elements, multiply, (0, 1, 2))


def idempotent_monoid_algebra():
    return monoid_algebra('k[{1,e}]', ['1', 'e'], lambda a, b: 'e' if 'e' in (a, b) else '1', '1')


def trivial_bimonoid():
    return Bimonoid.from_tables(GenSpace('k', 1), {(0, 0): {0: 1}}, {0: {(0, 0): 1}}, [1], {0: 1}, 'trivial')


def sweedler():
    """
    Sweedler's four dimensional Hopf algebra on the basis 1, g, x, gx with g² = 1, x² = 0,
    xg = -gx, δg = g⊗g, δx = x⊗1 + g⊗x and ε(x) = 0.
    """
    one, g, x, gx = range(4)
    products = {
        (one, one): {one: 1}, (one, g): {g: 1}, (one, x): {x: 1}, (one, gx): {gx: 1},
        (g, one): {g: 1}, (g, g): {one: 1}, (g, x): {gx: 1}, (g, gx): {x: 1},
        (x, one): {x: 1}, (x, g): {gx: -1},
        (gx, one): {gx: 1}, (gx, g): {x: -1},
    }
    coproducts = {
        one: {(one, one): 1},
        g: {(g, g): 1},
        x: {(x, one): 1, (g, x): 1},
        gx: {(gx, g): 1, (one, gx): 1},
    }
    return Bimonoid.from_tables(GenSpace('H4', 4), products, coproducts, [1, 1, 0, 0], {one: 1}, 'H4')


BUILDERS = {
    'trivial': trivial_bimonoid,
    'k[Z/2]': lambda: cyclic_group_algebra(2),
    'k[Z/3]': lambda: cyclic_group_algebra(3),
    'k[S3]': symmetric_group_algebra,
    'k[{1,e}]': idempotent_monoid_algebra,
    'H4': sweedler,
}

HOPF = {'trivial': True, 'k[Z/2]': True, 'k[Z/3]': True, 'k[S3]': True, 'k[{1,e}]': False, 'H4': True}


@lru_cache(maxsize=None)
def bimonoid(name):
    return validate_bimonoid(BUILDERS[name]())


def bimonoids():
    return [bimonoid(name) for name in BUILDERS]
