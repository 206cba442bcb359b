# vim: ts=4:sw=4:expandtabs

import logging
from functools import cached_property

from django.utils.translation import gettext_lazy as _

from skewcat.fusion.Bimonoid import (
    ASSOCIATIVITY, COASSOCIATIVITY, COMULTIPLICATIVE_PRODUCT, COMULTIPLICATIVE_UNIT, COUNITAL_PRODUCT,
    COUNITAL_UNIT, LEFT_COUNIT, LEFT_UNIT, RIGHT_COUNIT, RIGHT_UNIT,
)
from skewcat.skew import AxiomReport
from skewcat.tensor import Morphism, braiding, braiding_inverse, compose, tensor

from .ComodException import NotAComoduleMap, NotAComonoidMorphism, QuantumInvalid
from .Comodule import Comodule, cotensor
from .ComoduleMap import ComoduleMap
from .composable import composable_pairs, composable_triples

logger = logging.getLogger(__name__)

# The ten axioms: three comonad, three monoidal-morphism and four monoidal 2-cell laws.
# They carry the bimonoid names, and for C = I they are the bimonoid laws.
QUANTUM_AXIOMS = (
    COASSOCIATIVITY, LEFT_COUNIT, RIGHT_COUNIT,
    ASSOCIATIVITY, LEFT_UNIT, RIGHT_UNIT,
    COMULTIPLICATIVE_PRODUCT, COUNITAL_PRODUCT, COMULTIPLICATIVE_UNIT, COUNITAL_UNIT,
)

LAWS = {
    COASSOCIATIVITY: '(δ∘1)δ = (1∘δ)δ on A∘A∘A',
    LEFT_COUNIT: '(ε∘1)δ = 1 on 1∘A ≅ A',
    RIGHT_COUNIT: '(1∘ε)δ = 1 on A∘1 ≅ A',
    ASSOCIATIVITY: 'μ(μ⊗1) = μ(1⊗μ) on A⊗_C A⊗_C A',
    LEFT_UNIT: 'μ(η⊗1)l = 1',
    RIGHT_UNIT: 'μ(1⊗η)r = 1',
    COMULTIPLICATIVE_PRODUCT: 'δμ = (μ⊗μ)(1⊗b⊗1)(δ⊗δ) on A⊗_C A',
    COUNITAL_PRODUCT: 'εμ = ε⊗ε on A⊗_C A',
    COMULTIPLICATIVE_UNIT: 'δη = (ηt⊗1)δη',
    COUNITAL_UNIT: 'εη = ε_C',
}


class QuantumCategory(object):
    """
    A quantum category over a coalgebra C: a coalgebra A with comonoid maps s: A -> C° and
    t: A -> C, a multiplication mul: A⊗A -> A read on the composable part A ⊗_C A, and a
    unit unit: C -> A.

    As a comonad, A is the comodule C^e -> C^e with both coactions through
    r = (s⊗t)δ: A -> C°⊗C. Its 2-cells are ε = r: A => 1 and δ: A => A∘A. The monoidal
    2-cells φ2 and φ0 are mul and unit, read as maps of C-bicomodules
    A ⊗_C A => A and 1_C => A.

    A is a C-bicomodule with l(a) = s(a2)⊗a1, the right C°-coaction through s turned over,
    and r(a) = a1⊗t(a2). Over a cocommutative C the first is (s⊗1)δ.
    """
    def __init__(self, base, coalgebra, source, target, mul, unit, name=''):
        self.base = base
        self.coalgebra = coalgebra
        self.source = source
        self.target = target
        self.mul = mul
        self.unit = unit
        self.name = name

    @property
    def word(self):
        return self.coalgebra.word

    @property
    def comul(self):
        return self.coalgebra.comul

    @property
    def counit(self):
        return self.coalgebra.counit

    @cached_property
    def enveloping(self):
        """
        C^e = C°⊗C.
        """
        return self.base.co_opposite() * self.base

    @cached_property
    def coaction(self):
        """
        r = (s⊗t)δ: A -> C°⊗C.
        """
        return tensor(self.source, self.target) @ self.comul

    @cached_property
    def left_coaction(self):
        A, C = self.word, self.base.word
        return compose(braiding(A, C), tensor(Morphism.identity(A), self.source), self.comul)

    @cached_property
    def right_coaction(self):
        return tensor(Morphism.identity(self.word), self.target) @ self.comul

    @cached_property
    def pairs(self):
        return composable_pairs(self.left_coaction, self.right_coaction)

    @cached_property
    def triples(self):
        return composable_triples(self.left_coaction, self.right_coaction)

    def as_bicomodule(self):
        """
        A as a C-bicomodule through s and t.
        """
        return Comodule(self.base, self.base, self.word, self.left_coaction, self.right_coaction,
                        name='{0}_C'.format(self.name))

    def as_comodule(self):
        """
        A: C^e -> C^e with both coactions through r.
        """
        one = Morphism.identity(self.word)
        r = self.coaction
        return Comodule(self.enveloping, self.enveloping, self.word,
                        tensor(r, one) @ self.comul, tensor(one, r) @ self.comul, name=self.name)

    # the comonad and monoidal 2-cells

    @cached_property
    def eps(self):
        """
        ε = r: A => 1_{C^e}.
        """
        Ce = self.enveloping
        return ComoduleMap(self.as_comodule(), Comodule.identity(Ce), self.coaction, 'ε')

    @cached_property
    def delta(self):
        """
        δ: A => A∘A, corestricted to the cotensor square over C^e.
        """
        A = self.as_comodule()
        AA = cotensor(A, A, name='{0}∘{0}'.format(self.name))
        f = AA.inclusion.left_inverse() @ self.comul
        if AA.inclusion @ f != self.comul:
            raise NotAComoduleMap(_('δ of {name} does not land in A∘A.').format(name=self.name))
        return ComoduleMap(A, AA, f, 'δ')

    @cached_property
    def phi2(self):
        """
        φ2 = mul on A ⊗_C A, as a map of C-bicomodules into A.
        """
        A = self.as_bicomodule()
        AA = cotensor(A, A, name='{0}⊗_C {0}'.format(self.name))
        return ComoduleMap(AA, A, self.mul @ AA.inclusion, 'φ2')

    @cached_property
    def phi0(self):
        """
        φ0 = unit: 1_C => A.
        """
        return ComoduleMap(Comodule.identity(self.base), self.as_bicomodule(), self.unit, 'φ0')

    def check_structure(self):
        """
        Raise NotAComonoidMorphism unless s: A -> C°, t: A -> C and r: A -> C^e are comonoid
        maps, and NotAComoduleMap unless δ, φ2 and φ0 are 2-cells.
        """
        C, A = self.base, self.coalgebra
        legs = (
            ('s', self.source, C.co_opposite()),
            ('t', self.target, C),
            ('(s, t)', self.coaction, self.enveloping),
        )
        for label, f, D in legs:
            if not A.is_comonoid_map(f, D):
                raise NotAComonoidMorphism(_('{label}: {A} -> {D} is not a comonoid map.')
                                           .format(label=label, A=A.name, D=D.name))
        for cell in (self.eps, self.delta, self.phi2, self.phi0):
            logger.debug('%s: %r', self.name, cell)

    def check(self):
        """
        The ten axioms. The comonad laws go through the cells ε and δ on the cotensor
        powers of A over C^e, the rest are read on the composable parts over C.
        """
        C, A = self.base, self.word
        one = Morphism.identity(A)
        comul, counit, mul, unit = self.comul, self.counit, self.mul, self.unit
        P, T = self.pairs, self.triples
        b = braiding_inverse(A, A)

        # δ into A⊗A, and ε followed by the unitor 1∘A ≅ A
        delta = self.delta.cod.inclusion @ self.delta.f
        eps = self.enveloping.counit @ self.eps.f

        report = AxiomReport(self.name)
        laws = [
            (COASSOCIATIVITY, tensor(delta, one) @ delta, tensor(one, delta) @ delta),
            (LEFT_COUNIT, tensor(eps, one) @ delta, one),
            (RIGHT_COUNIT, tensor(one, eps) @ delta, one),
            (ASSOCIATIVITY, compose(mul, tensor(mul, one), T), compose(mul, tensor(one, mul), T)),
            (LEFT_UNIT, compose(mul, tensor(unit, one), self.left_coaction), one),
            (RIGHT_UNIT, compose(mul, tensor(one, unit), self.right_coaction), one),
            (COMULTIPLICATIVE_PRODUCT, compose(comul, mul, P),
             compose(tensor(mul, mul), tensor(one, b, one), tensor(comul, comul), P)),
            (COUNITAL_PRODUCT, compose(counit, mul, P), tensor(counit, counit) @ P),
            (COMULTIPLICATIVE_UNIT, comul @ unit, compose(tensor(unit @ self.target, one), comul, unit)),
            (COUNITAL_UNIT, counit @ unit, C.counit),
        ]
        for axiom, lhs, rhs in laws:
            report.check_equal(axiom, LAWS[axiom], lhs, rhs)
        logger.debug('%s: |A ⊗_C A| = %d, |A ⊗_C A ⊗_C A| = %d', self.name, P.dom.dim, T.dom.dim)
        return report

    def validate(self):
        self.check_structure()
        report = self.check()
        if not report.passed:
            msg = _('{name} is not a quantum category: {failing} fails.')
            raise QuantumInvalid(msg.format(name=self.name, failing=', '.join(sorted(report.failing()))), report)
        return self

    def replace(self, **changes):
        fields = dict(base=self.base, coalgebra=self.coalgebra, source=self.source, target=self.target,
                      mul=self.mul, unit=self.unit, name=self.name)
        fields.update(changes)
        return QuantumCategory(**fields)

    def maps(self):
        return {
            'comul': self.comul, 'counit': self.counit, 'source': self.source, 'target': self.target,
            'mul': self.mul, 'unit': self.unit,
        }

    def __repr__(self):
        return '<QuantumCategory {0} over {1}>'.format(self.name, self.base.name)
