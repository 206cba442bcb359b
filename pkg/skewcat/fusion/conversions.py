# vim: ts=4:sw=4:expandtabs
"""
The bijections between lax fusion operators, augmented lax tricocycloids and bimonoids on
one object A, and the left skew monoidal structure X∗Y = A⊗X⊗Y an augmented tricocycloid
puts on the base category.
"""

import logging

from django.utils.translation import gettext_lazy as _

from skewcat.skew import (
    LEFT_UNIT, RIGHT_UNIT, TRIANGLE, UNIT_UNIT, AxiomReport, MatrixSandbox, SkewStructure,
    TensorProduct,
)
from skewcat.tensor import Morphism, TensorWord, braiding, braiding_inverse, compose, tensor

from .Bimonoid import Bimonoid
from .FusionException import MissingAugmentation, NotABimonoid, NotATricocycloid
from .FusionOperator import FusionOperator
from .Tricocycloid import Tricocycloid

logger = logging.getLogger(__name__)

AUG_TRIANGLE = 'aug-triangle'
AUG_COUNIT = 'aug-counit'
AUG_UNIT = 'aug-unit'
AUG_SCALAR = 'aug-scalar'

COCYCLE = '3-cocycle'
PENTAGON_EQUATION = 'pentagon-equation'

AUGMENTATION_AXIOMS = (AUG_TRIANGLE, AUG_COUNIT, AUG_UNIT, AUG_SCALAR)

AUGMENTATION_LAWS = {
    AUG_TRIANGLE: '(1⊗ε)v(1⊗η) = 1',
    AUG_COUNIT: '(ε⊗1)v = 1⊗ε',
    AUG_UNIT: 'v(η⊗1) = 1⊗η',
    AUG_SCALAR: 'εη = 1',
}

# Each augmentation law is the unit-object instance of one skew unit law of the
# structure built by skew_from_tricocycloid.
AUGMENTATION_TO_SKEW = {
    AUG_TRIANGLE: TRIANGLE,
    AUG_COUNIT: LEFT_UNIT,
    AUG_UNIT: RIGHT_UNIT,
    AUG_SCALAR: UNIT_UNIT,
}


def is_lax_fusion_operator(f):
    return f.is_lax()


def is_tricocycloid(t):
    return t.is_tricocycloid()


def check_fusion_operator(f):
    report = AxiomReport(f.name)
    report.check_equal(PENTAGON_EQUATION, 'V₂₃V₁₂ = V₁₂V₁₃V₂₃', *f.sides())
    return report


def check_tricocycloid(t):
    """
    The 3-cocycle condition, followed by the augmentation laws when t carries η and ε.
    """
    report = AxiomReport(t.name)
    report.check_equal(COCYCLE, '(v⊗1)(1⊗c)(v⊗1) = (1⊗v)(v⊗1)(1⊗v)', *t.sides())
    if t.is_augmented:
        report.extend(check_augmentation(t))
    return report


def fusion_to_tricocycloid(f):
    """
    v = c∘V.
    """
    A = TensorWord.of(f.space)
    v = braiding(A, A) @ f.V
    return Tricocycloid(f.space, v, name=f.name)


def tricocycloid_to_fusion(t):
    """
    V = c⁻¹∘v.
    """
    A = TensorWord.of(t.space)
    return FusionOperator(t.space, braiding_inverse(A, A) @ t.v, name=t.name)


def check_augmentation(t):
    if not t.is_augmented:
        raise MissingAugmentation(_('Tricocycloid {name} has no unit and counit.').format(name=t.name))

    A = TensorWord.of(t.space)
    one = Morphism.identity(A)
    v, eta, eps = t.v, t.eta, t.eps

    report = AxiomReport(t.name)
    laws = [
        (AUG_TRIANGLE, compose(tensor(one, eps), v, tensor(one, eta)), one),
        (AUG_COUNIT, compose(tensor(eps, one), v), tensor(one, eps)),
        (AUG_UNIT, compose(v, tensor(eta, one)), tensor(one, eta)),
        (AUG_SCALAR, eps @ eta, Morphism.identity(TensorWord.unit())),
    ]
    for name, lhs, rhs in laws:
        report.check_equal(name, AUGMENTATION_LAWS[name], lhs, rhs)
    return report


def validate_tricocycloid(t):
    """
    Raise NotATricocycloid unless t is an augmented lax tricocycloid.
    """
    if not t.is_tricocycloid():
        raise NotATricocycloid(_('{name} fails the 3-cocycle condition.').format(name=t.name))

    report = check_augmentation(t)
    if not report.passed:
        msg = _('{name} fails the augmentation laws: {failing}.')
        raise NotATricocycloid(msg.format(name=t.name, failing=', '.join(sorted(report.failing()))), report)
    return t


def validate_bimonoid(b, inverse_braiding=True):
    report = b.check(inverse_braiding)
    if not report.passed:
        msg = _('{name} is not a bimonoid: {failing} fails.')
        raise NotABimonoid(msg.format(name=b.name, failing=', '.join(sorted(report.failing()))), report)
    return b


def bimonoid_to_tricocycloid(b):
    """
    v = c(1⊗μ)(δ⊗1), with η and ε inherited. The bimonoid is validated with respect to the
    inverse braiding.
    """
    validate_bimonoid(b, inverse_braiding=True)
    A = TensorWord.of(b.space)
    one = Morphism.identity(A)
    v = compose(braiding(A, A), tensor(one, b.mul), tensor(b.comul, one))
    logger.debug('tricocycloid of %s has rank %d of %d', b.name, v.rank(), v.dom.dim)
    return Tricocycloid(b.space, v, b.unit, b.counit, name=b.name)


def tricocycloid_to_bimonoid(t):
    """
    μ = (1⊗ε)v and δ = c⁻¹v(1⊗η); the unit and counit are η and ε.
    """
    validate_tricocycloid(t)
    A = TensorWord.of(t.space)
    one = Morphism.identity(A)
    mul = compose(tensor(one, t.eps), t.v)
    comul = compose(braiding_inverse(A, A), t.v, tensor(one, t.eta))
    return Bimonoid(t.space, mul, t.eta, comul, t.eps, name=t.name)


def is_hopf_via_fusion(b):
    return bimonoid_to_tricocycloid(b).v.is_invertible()


def skew_from_tricocycloid(t, validate=True):
    """
    The left skew structure X∗Y = A⊗X⊗Y with unit I and
        α = (1_A⊗c_{A,X}⊗1⊗1)(v⊗1⊗1⊗1),   λ = ε⊗1,   ρ = η⊗1.
    """
    if validate:
        validate_tricocycloid(t)
    elif not t.is_augmented:
        raise MissingAugmentation(_('Tricocycloid {name} has no unit and counit.').format(name=t.name))

    A = TensorWord.of(t.space)
    one_a = Morphism.identity(A)

    def assoc(x, y, z):
        rest = Morphism.identity(y + z)
        return compose(
            tensor(one_a, braiding(A, x), rest),
            tensor(t.v, Morphism.identity(x), rest),
        )

    return SkewStructure(
        MatrixSandbox(), TensorProduct.whiskered(prefix=A), TensorWord.unit(),
        assoc=assoc,
        left_unit=lambda x: tensor(t.eps, Morphism.identity(x)),
        right_unit=lambda x: tensor(t.eta, Morphism.identity(x)),
        name='skew({0})'.format(t.name),
    )
