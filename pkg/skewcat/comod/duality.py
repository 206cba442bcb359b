# vim: ts=4:sw=4:expandtabs
"""
Bidualities in Comod(V), the canonical monoidale on C^e = C°⊗C and transposition of
comodules C^e -> C^e along the biduality.

V is finite dimensional rational vector spaces with the swap braiding. Coreflexive
equalizers are kernels there and every tensor functor preserves them, so cotensor
composition is associative and unital up to the canonical isos found below, and a
cotensor over a tensor product of coalgebras splits into cotensors over the factors.
"""

import logging
from collections import namedtuple

from skewcat.skew import AxiomReport

from .Biduality import Biduality, iso_check, legwise_iso_check
from .Comodule import Comodule, cotensor, tensor_comodules

logger = logging.getLogger(__name__)

MONOIDALE_ASSOC = 'monoidale-assoc'
MONOIDALE_LEFT_UNIT = 'monoidale-left-unit'
MONOIDALE_RIGHT_UNIT = 'monoidale-right-unit'

MONOIDALE_AXIOMS = (MONOIDALE_ASSOC, MONOIDALE_LEFT_UNIT, MONOIDALE_RIGHT_UNIT)

LAWS = {
    MONOIDALE_ASSOC: 'p∘(p⊗1) ≅ p∘(1⊗p)',
    MONOIDALE_LEFT_UNIT: 'p∘(j⊗1) ≅ 1',
    MONOIDALE_RIGHT_UNIT: 'p∘(1⊗j) ≅ 1',
}

# p = left⊗middle⊗right with left: C° -> C°, middle: C⊗C° -> I and right: C -> C
Monoidale = namedtuple('Monoidale', 'duality carrier p j factors isos')


def bidual(C):
    return Biduality.of(C)


def monoidale_of(duality, left, middle, right, j):
    p = tensor_comodules(tensor_comodules(left, middle), right, name='p')
    return Monoidale(duality, duality.enveloping, p, j, (left, middle, right), {})


def canonical_monoidale(C):
    """
    p = 1⊗e⊗1: C°⊗C⊗C°⊗C -> C°⊗C and j = n: I -> C°⊗C.
    """
    duality = bidual(C)
    return monoidale_of(duality, Comodule.identity(duality.C_op), duality.e, Comodule.identity(C), duality.n)


def associativity_legs(monoidale):
    """
    p∘(p⊗1) and p∘(1⊗p) as lists of four comodules whose tensor product they are, one per
    group of legs that meet: C°, C⊗C°, C⊗C° and C on the source side.
    """
    left, middle, right = monoidale.factors
    one_op, one_c = Comodule.identity(left.src), Comodule.identity(right.src)
    outer = [
        cotensor(left, left),
        middle,
        cotensor(tensor_comodules(right, one_op), middle),
        cotensor(one_c, right),
    ]
    inner = [
        cotensor(one_op, left),
        cotensor(tensor_comodules(one_c, left), middle),
        middle,
        cotensor(right, right),
    ]
    return outer, inner


def check_monoidale(monoidale, axioms=MONOIDALE_AXIOMS):
    """
    The pseudomonoid axioms of (C^e, p, j), each up to an explicitly found comodule iso.
    Associativity is compared leg by leg, so no cotensor is taken over more than C⊗C°.
    """
    Ce, p, j = monoidale.carrier, monoidale.p, monoidale.j
    one = Comodule.identity(Ce)

    report = AxiomReport('{0}^e'.format(monoidale.duality.C.name))
    if MONOIDALE_ASSOC in axioms:
        outer, inner = associativity_legs(monoidale)
        legwise_iso_check(report, MONOIDALE_ASSOC, LAWS[MONOIDALE_ASSOC], outer, inner, monoidale.isos)
    if MONOIDALE_LEFT_UNIT in axioms:
        iso_check(report, MONOIDALE_LEFT_UNIT, LAWS[MONOIDALE_LEFT_UNIT],
                  cotensor(tensor_comodules(j, one), p), one, monoidale.isos)
    if MONOIDALE_RIGHT_UNIT in axioms:
        iso_check(report, MONOIDALE_RIGHT_UNIT, LAWS[MONOIDALE_RIGHT_UNIT],
                  cotensor(tensor_comodules(one, j), p), one, monoidale.isos)
    return report


def transpose_via_biduality(t, C, duality=None):
    """
    t̂ = (e⊗1)∘(1⊗t): C⊗C^e -> C for a comodule t: C^e -> C^e.
    """
    duality = duality or bidual(C)
    one_c = Comodule.identity(C)
    transposed = cotensor(tensor_comodules(one_c, t), tensor_comodules(duality.e, one_c),
                          name='{0}^'.format(t.name))
    logger.debug('transpose of %s has dimension %d', t.name, transposed.dim)
    return transposed
