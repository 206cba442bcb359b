# vim: ts=4:sw=4:expandtabs
"""
The in-repo coalgebra and quantum category corpus. Quantum categories are validated before
they are handed out.
"""

from functools import lru_cache

from skewcat.fusion.corpus import bimonoid
from skewcat.span.corpus import category
from skewcat.tensor import GenSpace

from .FinCoalgebra import FinCoalgebra
from .correspondence import chaotic_quantum_category, quantum_from_bimonoid
from .linearization import quantum_from_category


def path_coalgebra():
    """
    The path coalgebra of a -f-> b: δa = a⊗a, δb = b⊗b, δf = a⊗f + f⊗b, ε(f) = 0.
    """
    a, b, f = range(3)
    coproducts = {a: {(a, a): 1}, b: {(b, b): 1}, f: {(a, f): 1, (f, b): 1}}
    return FinCoalgebra.from_tables(GenSpace('k[a->b]', 3), coproducts, [1, 1, 0], 'k[a->b]')


def divided_powers(n=2):
    """
    The divided power coalgebra D_n: δd_k = Σ d_i⊗d_(k-i), ε(d_0) = 1.
    """
    name = 'D{0}'.format(n)
    coproducts = {k: {(i, k - i): 1 for i in range(k + 1)} for k in range(n + 1)}
    return FinCoalgebra.from_tables(GenSpace(name, n + 1), coproducts, [1] + [0] * n, name)


COALGEBRAS = {
    'I': FinCoalgebra.unit,
    'k{x,y}': lambda: FinCoalgebra.grouplike('k{x,y}', 2),
    'k[a->b]': path_coalgebra,
    'D2': divided_powers,
}

COCOMMUTATIVE = {'I': True, 'k{x,y}': True, 'k[a->b]': False, 'D2': True}


@lru_cache(maxsize=None)
def coalgebra(name):
    return COALGEBRAS[name]().validate()


def coalgebras():
    return [coalgebra(name) for name in COALGEBRAS]


QUANTUM_BUILDERS = {
    'chaotic(I)': lambda: chaotic_quantum_category(coalgebra('I')),
    'chaotic(k{x,y})': lambda: chaotic_quantum_category(coalgebra('k{x,y}')),
    'chaotic(k[a->b])': lambda: chaotic_quantum_category(coalgebra('k[a->b]')),
    'chaotic(D2)': lambda: chaotic_quantum_category(coalgebra('D2')),
    'trivial': lambda: quantum_from_bimonoid(bimonoid('trivial')),
    'k[Z/2]': lambda: quantum_from_bimonoid(bimonoid('k[Z/2]')),
    'k[Z/3]': lambda: quantum_from_bimonoid(bimonoid('k[Z/3]')),
    'H4': lambda: quantum_from_bimonoid(bimonoid('H4')),
    'arrow': lambda: quantum_from_category(category('arrow')),
    'discrete(2)': lambda: quantum_from_category(category('discrete(2)')),
}


@lru_cache(maxsize=None)
def quantum_category(name):
    return QUANTUM_BUILDERS[name]().validate()


def quantum_categories():
    return [quantum_category(name) for name in QUANTUM_BUILDERS]
