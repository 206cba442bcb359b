# vim: ts=4:sw=4:expandtabs
"""
Small categories for the Span checks, and a random generator bounded by
SKEWCAT_FUZZ_MAX_OBJECTS and SKEWCAT_FUZZ_MAX_MORPHISMS.
"""

from functools import lru_cache

from django.conf import settings

from .FinCategory import FinCategory


def discrete_category(n):
    objects = ['x{0}'.format(i) for i in range(n)]
    morphisms = ['id_{0}'.format(x) for x in objects]
    ident = dict(zip(objects, morphisms))
    return FinCategory(
        objects, morphisms, {f: x for x, f in ident.items()}, {f: x for x, f in ident.items()},
        ident, {(f, f): f for f in morphisms}, name='discrete({0})'.format(n),
    )


def _element(i):
    return 'e' if i == 0 else ('g' if i == 1 else 'g{0}'.format(i))


def cyclic_group_category(n):
    """
    Z/n as a one-object category, with morphisms e, g, g2, ...
    """
    morphisms = [_element(i) for i in range(n)]
    return FinCategory(
        ['*'], morphisms, {f: '*' for f in morphisms}, {f: '*' for f in morphisms}, {'*': 'e'},
        {(_element(i), _element(j)): _element((i + j) % n) for i in range(n) for j in range(n)},
        name='Z/{0}'.format(n),
    )


def poset_category(elements, leq, name=''):
    """
    The category of a finite preorder: one morphism 'x->y' whenever leq(x, y).
    """
    def arrow(x, y):
        return '{0}->{1}'.format(x, y)

    pairs = [(x, y) for x in elements for y in elements if leq(x, y)]
    morphisms = [arrow(x, y) for x, y in pairs]
    comp = {
        (arrow(x, y), arrow(y2, z)): arrow(x, z)
        for x, y in pairs for y2, z in pairs if y == y2
    }
    return FinCategory(
        elements, morphisms,
        {arrow(x, y): x for x, y in pairs}, {arrow(x, y): y for x, y in pairs},
        {x: arrow(x, x) for x in elements}, comp, name=name,
    )


def monoid_category(elements, multiply, identity, name=''):
    """
    A finite monoid as a one-object category; f;g is multiply(f, g).
    """
    return FinCategory(
        ['*'], list(elements), {f: '*' for f in elements}, {f: '*' for f in elements}, {'*': identity},
        {(f, g): multiply(f, g) for f in elements for g in elements}, name=name,
    )


def truncated_sum(n):
    """
    {0, ..., n-1} under addition capped at n-1.
    """
    elements = ['n{0}'.format(i) for i in range(n)]
    return monoid_category(elements, lambda f, g: elements[min(int(f[1:]) + int(g[1:]), n - 1)], 'n0',
                           name='trunc({0})'.format(n))


def right_zero_monoid(k):
    """
    e with k right zeros: f;z = z and f;e = f.
    """
    elements = ['e'] + ['z{0}'.format(i) for i in range(1, k + 1)]
    return monoid_category(elements, lambda f, g: f if g == 'e' else g, 'e', name='rzero({0})'.format(k))


def parallel_arrows(k, tail=False):
    """
    x with k parallel arrows f1, ..., fk to y. With `tail`, also h: y -> z and the k distinct
    composites fi;h.
    """
    objects = ['x', 'y'] + (['z'] if tail else [])
    parallel = ['f{0}'.format(i) for i in range(1, k + 1)]
    source = {'id_{0}'.format(x): x for x in objects}
    target = dict(source)
    source.update({f: 'x' for f in parallel})
    target.update({f: 'y' for f in parallel})
    comp = {}
    if tail:
        source['h'], target['h'] = 'y', 'z'
        for f in parallel:
            source[f + ';h'], target[f + ';h'] = 'x', 'z'
            comp[(f, 'h')] = f + ';h'

    for f in source:
        comp[('id_' + source[f], f)] = f
        comp[(f, 'id_' + target[f])] = f
    return FinCategory(
        objects, list(source), source, target, {x: 'id_{0}'.format(x) for x in objects}, comp,
        name='{0}({1})'.format('fork' if tail else 'parallel', k),
    )


def arrow_category():
    order = {'a': 0, 'b': 1}
    return poset_category(['a', 'b'], lambda x, y: order[x] <= order[y], name='arrow')


def commutative_square():
    below = {'a': {'a'}, 'b': {'a', 'b'}, 'c': {'a', 'c'}, 'd': {'a', 'b', 'c', 'd'}}
    return poset_category(['a', 'b', 'c', 'd'], lambda x, y: x in below[y], name='square')


BUILDERS = {
    'discrete(2)': lambda: discrete_category(2),
    'Z/2': lambda: cyclic_group_category(2),
    'Z/3': lambda: cyclic_group_category(3),
    'arrow': arrow_category,
    'square': commutative_square,
    'parallel(2)': lambda: parallel_arrows(2),
    'trunc(3)': lambda: truncated_sum(3),
}


@lru_cache(maxsize=None)
def category(name):
    return BUILDERS[name]().validate()


def categories():
    return [category(name) for name in BUILDERS]


def _random_one_object(rng, max_morphisms):
    n = max(1, min(max_morphisms, 6))
    family = rng.choice(('cyclic', 'truncated', 'right-zero'))
    if family == 'cyclic':
        return cyclic_group_category(rng.randint(1, n))
    if family == 'truncated':
        return truncated_sum(rng.randint(1, n))
    return right_zero_monoid(rng.randint(0, n - 1))


def _random_parallel(rng, max_objects, max_morphisms):
    # parallel(k) has k + 2 morphisms, fork(k) has 2k + 4
    if max_objects >= 3 and max_morphisms >= 6 and rng.random() < 0.5:
        return parallel_arrows(rng.randint(1, (max_morphisms - 4) // 2), tail=True)
    return parallel_arrows(rng.randint(1, max_morphisms - 2))


def random_category(rng):
    """
    A random finite category within the configured size bounds: a poset, a finite monoid
    (cyclic group, truncated sum or right-zero monoid) or a quiver of parallel arrows.
    `rng` is a random.Random.
    """
    max_objects = settings.SKEWCAT_FUZZ_MAX_OBJECTS
    max_morphisms = settings.SKEWCAT_FUZZ_MAX_MORPHISMS

    draw = rng.random()
    if draw < 0.3:
        return _random_one_object(rng, max_morphisms)
    if draw < 0.5 and max_objects >= 2 and max_morphisms >= 3:
        return _random_parallel(rng, max_objects, max_morphisms)

    n = rng.randint(1, max(1, min(max_objects, max_morphisms)))
    elements = ['x{0}'.format(i) for i in range(n)]
    budget = max_morphisms - n
    # below[j] is the down-set of j; joining whole down-sets of earlier elements keeps it closed
    below = {}
    for j in range(n):
        below[j] = {j}
        for i in range(j):
            if i in below[j] or rng.random() >= 0.4:
                continue
            added = below[i] - below[j]
            if len(added) <= budget:
                budget -= len(added)
                below[j] |= added
    return poset_category(
        elements, lambda x, y: int(x[1:]) in below[int(y[1:])],
        name='poset[{0}]'.format(rng.getrandbits(32)),
    )
