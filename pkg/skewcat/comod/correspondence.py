# vim: ts=4:sw=4:expandtabs
"""
Quantum categories over C and left skew monoidales on C in Comod(V), in both directions.

A quantum category (A, s, t, mul, unit) gives the tensor M: C⊗C -> C on A with left coaction
a -> s(a3)⊗t(a1)⊗a2 and right coaction (1⊗t)δ, the unit ε*: I -> C on C, and

    α = (1⊗mul)(c⊗1)(1⊗δ),   λ = t,   ρ = unit.

The source leg of M comes from the right C°-coaction a -> a1⊗s(a2) of A: C^e -> C^e, turned
into a left C-coaction through the counit e of the biduality.

Going back, δ = α(ρ⊗1)l, ε = ε_C λ, mul = (ε⊗1)α and unit = ρ, with s and t read off the
left coaction of M.
"""

import logging

from django.utils.translation import gettext_lazy as _

from skewcat.skew import SkewException, SkewStructure
from skewcat.tensor import Morphism, braiding, compose, tensor

from .ComodBicat import ComodBicat, left_coaction
from .ComodException import ComodException, SkewInvalid
from .Comodule import Comodule
from .ComoduleMap import ComoduleMap
from .FinCoalgebra import FinCoalgebra
from .QuantumCategory import QuantumCategory
from .composable import composable_pairs

logger = logging.getLogger(__name__)


def unit_comodule(C):
    """
    ε*: I -> C, the space of C with the trivial left coaction and δ on the right.
    """
    return Comodule(FinCoalgebra.unit(), C, C.word, Morphism.identity(C.word), C.comul,
                    name='ε*_{0}'.format(C.name))


def counit_comodule(C):
    """
    ε_*: C -> I, the space of C with δ on the left and the trivial right coaction.
    """
    return Comodule(C, FinCoalgebra.unit(), C.word, C.comul, Morphism.identity(C.word),
                    name='ε_*{0}'.format(C.name))


def tensor_comodule(q):
    A, C = q.word, q.base.word
    one = Morphism.identity(A)
    left = compose(braiding(C + A, C), tensor(q.target, one, q.source), tensor(q.comul, one), q.comul)
    return Comodule(q.base * q.base, q.base, q.word, left, q.right_coaction, name='M_{0}'.format(q.name))


def chaotic_quantum_category(C, name=None):
    """
    A = C°⊗C with s = 1⊗ε, t = ε⊗1, mul = 1⊗ε⊗ε⊗1 and unit δ. On a set this is the chaotic
    category with exactly one morphism between any two objects.
    """
    A = C.co_opposite() * C
    one, eps = Morphism.identity(C.word), C.counit
    return QuantumCategory(
        C, A,
        source=tensor(one, eps),
        target=tensor(eps, one),
        mul=tensor(one, eps, eps, one),
        unit=C.comul,
        name=name or 'chaotic({0})'.format(C.name),
    )


def quantum_from_bimonoid(b):
    """
    A bimonoid is a quantum category over I.
    """
    A = FinCoalgebra(b.word, b.comul, b.counit, b.name)
    return QuantumCategory(FinCoalgebra.unit(), A, b.counit, b.counit, b.mul, b.unit, name=b.name)


def quantum_to_skew(q, validate=True):
    """
    α(a⊗b) = b1⊗mul(a⊗b2), that is c(mul⊗1)(1⊗cδ). This is the left fusion map
    (mul⊗1)(1⊗δ) with the factors of M∘(1⊗M) listed inner first and δ read through the swap,
    so that a⊗b2 stays composable for l(b) = s(b2)⊗b1. Over I it is c∘v∘c for the
    tricocycloid v = c(1⊗μ)(δ⊗1) of the opposite multiplication.
    """
    if validate:
        q.validate()
    A = q.word
    one = Morphism.identity(A)
    alpha = compose(tensor(one, q.mul), tensor(braiding(A, A), one), tensor(one, q.comul))
    return SkewStructure(ComodBicat(), tensor_comodule(q), unit_comodule(q.base), alpha, q.target, q.unit,
                         name='comod({0})'.format(q.name))


def skew_to_quantum(s, validate=True):
    """
    Read a quantum category off a left skew monoidale on C. The derived coalgebra is
    checked first, then the source and target maps, then the quantum axioms.
    """
    if validate:
        try:
            report = s.check()
        except SkewException as e:
            raise SkewInvalid(e.msg)
        if not report.passed:
            msg = _('{name} is not a skew monoidale: {failing} fails.')
            raise SkewInvalid(msg.format(name=s.name, failing=', '.join(sorted(report.failing()))), report)

    m = s.tensor
    C = m.tgt
    one_c = Morphism.identity(C.word)
    counit = C.counit @ s.left_unit
    comul = compose(s.assoc, tensor(s.right_unit, Morphism.identity(m.word)), left_coaction(m))
    A = FinCoalgebra(m.word, comul, counit, name='A({0})'.format(s.name))
    if validate:
        A.validate()

    # s(a2)⊗t(a1); s lands in C° and t in C, and q.validate checks (s⊗t)δ against C^e
    ends = tensor(one_c, one_c, counit) @ m.left

    q = QuantumCategory(
        C, A,
        source=tensor(one_c, C.counit) @ ends,
        target=tensor(C.counit, one_c) @ ends,
        mul=tensor(counit, Morphism.identity(m.word)) @ s.assoc,
        unit=s.right_unit,
        name=s.name,
    )
    if validate:
        q.validate()
    logger.debug('%s: quantum category of dimension %d over %s', s.name, A.dim, C.name)
    return q


def quantum_iso(q, r):
    """
    The identity of A as a bicomodule iso q => r carrying δ, ε, mul and unit across, or None
    when q and r differ.
    """
    if q.word != r.word or q.base != r.base:
        return None
    try:
        iso = ComoduleMap(q.as_bicomodule(), r.as_bicomodule(), Morphism.identity(q.word), 'iso')
    except ComodException:
        return None
    f = iso.f
    ff = tensor(f, f)
    carried = (
        r.comul @ f == ff @ q.comul
        and r.counit @ f == q.counit
        and compose(r.mul, ff, q.pairs) == compose(f, q.mul, q.pairs)
        and f @ q.unit == r.unit
    )
    return iso if carried else None


def skew_iso(s, t):
    """
    The identity of M as a comodule iso s => t carrying α (on A ⊗_C A), λ and ρ across, or None.
    """
    m, n = s.tensor, t.tensor
    if m.word != n.word:
        return None
    try:
        iso = ComoduleMap(m, n, Morphism.identity(m.word), 'iso')
        ComoduleMap(s.unit, t.unit, Morphism.identity(s.unit.word), 'unit')
    except ComodException:
        return None
    f = iso.f
    ff = tensor(f, f)
    P = composable_pairs(left_coaction(m), m.right)
    carried = (
        compose(t.assoc, ff, P) == compose(ff, s.assoc, P)
        and t.left_unit @ f == s.left_unit
        and f @ s.right_unit == t.right_unit
    )
    return iso if carried else None


def quantum_roundtrip(q):
    """
    quantum -> skew -> quantum, with the iso back to q.
    """
    r = skew_to_quantum(quantum_to_skew(q))
    return r, quantum_iso(q, r)


def skew_roundtrip(s):
    t = quantum_to_skew(skew_to_quantum(s))
    return t, skew_iso(s, t)
