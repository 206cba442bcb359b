# vim: ts=4:sw=4:expandtabs
"""
Skew left warpings from tricocycloids, dualities and opmonoidal monads, the inverse
passage from warpings with K = I back to opmonoidal monads, and the warped skew structure
A∗B = TA⊗B with unit K.
"""

import logging

from django.utils.translation import gettext_lazy as _

from skewcat.fusion import validate_tricocycloid
from skewcat.skew import (
    REV, AxiomReport, SandboxObjects, SkewStructure, TensorProduct, dualize, monoidal_structure,
)
from skewcat.tensor import Morphism, TensorWord, braiding, compose, tensor

from .NaturalFamily import DERIVED, IDENTITY, LEFT_WHISKER, MONAD, TRICOCYCLOID, NaturalFamily
from .OpmonoidalFunctorWitness import OpmonoidalFunctorWitness
from .OpmonoidalMonad import OpmonoidalMonad
from .SkewLeftWarping import SkewLeftWarping
from .TensorialEndofunctor import TensorialEndofunctor
from .WarpingException import (
    KNotUnit, NotADuality, NotAnOpmonoidalMonad, NotRightNormal, WarpingInvalid,
)

logger = logging.getLogger(__name__)

TRIANGLE_K = 'duality-triangle-k'
TRIANGLE_R = 'duality-triangle-r'


def check_warping_axioms(w, objs=None):
    return w.check(objs)


def trivial_warping(base=None):
    """
    T = Id, K = I, v = 1, v0 = 1 and k = ρ.
    """
    base = base or monoidal_structure()
    obj = base.tensor.obj
    return SkewLeftWarping(
        TensorialEndofunctor.identity(), base.unit,
        NaturalFamily(IDENTITY, None, lambda a, b: Morphism.identity(obj(a, b))),
        Morphism.identity(base.unit),
        NaturalFamily(DERIVED, None, base.right_unit),
        base, name='trivial',
    )


def warping_from_tricocycloid(t, validate=True):
    """
    TX = A⊗X, K = I, v(X,Y) = (1_A⊗c_{A,X}⊗1_Y)(v⊗1_X⊗1_Y), v0 = ε and k(X) = η⊗1_X.
    """
    if validate:
        validate_tricocycloid(t)
    A = TensorWord.of(t.space)
    one_a = Morphism.identity(A)

    def v(x, y):
        one_y = Morphism.identity(y)
        return tensor(one_a, braiding(A, x), one_y) @ tensor(t.v, Morphism.identity(x), one_y)

    return SkewLeftWarping(
        TensorialEndofunctor.left(A), TensorWord.unit(),
        NaturalFamily(TRICOCYCLOID, t.v, v),
        t.eps,
        NaturalFamily(LEFT_WHISKER, t.eta, lambda x: tensor(t.eta, Morphism.identity(x))),
        monoidal_structure(), name='warp({0})'.format(t.name),
    )


def check_duality(K, R, eta, eps):
    """
    The two triangle identities of a right dual R of K with η: I -> R⊗K, ε: K⊗R -> I.
    """
    one_k, one_r = Morphism.identity(K), Morphism.identity(R)
    report = AxiomReport('{0} ⊣ {1}'.format(K, R))
    report.check_equal(TRIANGLE_K, '(ε⊗1)(1⊗η) = 1_K', tensor(eps, one_k) @ tensor(one_k, eta), one_k)
    report.check_equal(TRIANGLE_R, '(1⊗ε)(η⊗1) = 1_R', tensor(one_r, eps) @ tensor(eta, one_r), one_r)
    return report


def warping_from_duality(K, R, eta, eps):
    """
    TA = A⊗R with v = 1, v0 = ε and k(A) = 1_A⊗η; Hopf by construction.
    """
    K, R = TensorWord([K]), TensorWord([R])
    report = check_duality(K, R, eta, eps)
    if not report.passed:
        msg = _('{K} and {R} are not dual: {failing} fails.')
        raise NotADuality(msg.format(K=K, R=R, failing=', '.join(sorted(report.failing()))), report)

    T = TensorialEndofunctor.right(R)
    return SkewLeftWarping(
        T, K,
        NaturalFamily(IDENTITY, None, lambda a, b: Morphism.identity(T(a) + T(b))),
        eps,
        NaturalFamily(LEFT_WHISKER, eta, lambda a: tensor(Morphism.identity(a), eta)),
        monoidal_structure(), name='duality({0}, {1})'.format(K, R),
    )


def identity_monad(base=None):
    base = base or monoidal_structure()
    T = TensorialEndofunctor.identity()
    return OpmonoidalMonad(
        T,
        NaturalFamily(IDENTITY, None, Morphism.identity),
        NaturalFamily(IDENTITY, None, Morphism.identity),
        NaturalFamily(IDENTITY, None, lambda a, b: Morphism.identity(base.tensor.obj(a, b))),
        Morphism.identity(base.unit),
        base, name='identity',
    )


def monad_from_bimonoid(b):
    """
    T = A⊗- with μ⊗1, η⊗1, ψ(X,Y) = (1_A⊗c_{A,X}⊗1_Y)((c∘δ)⊗1_X⊗1_Y) and ψ0 = ε.
    """
    A = b.word
    one_a = Morphism.identity(A)
    twisted = braiding(A, A) @ b.comul

    def psi(x, y):
        one_y = Morphism.identity(y)
        return tensor(one_a, braiding(A, x), one_y) @ tensor(twisted, Morphism.identity(x), one_y)

    return OpmonoidalMonad(
        TensorialEndofunctor.left(A),
        NaturalFamily(LEFT_WHISKER, b.mul, lambda x: tensor(b.mul, Morphism.identity(x))),
        NaturalFamily(LEFT_WHISKER, b.unit, lambda x: tensor(b.unit, Morphism.identity(x))),
        NaturalFamily(TRICOCYCLOID, twisted, psi),
        b.counit,
        monoidal_structure(), name='{0}⊗-'.format(b.name),
    )


def validate_monad(m, objs=None):
    report = m.check(objs)
    if not report.passed:
        msg = _('{name} is not an opmonoidal monad: {failing} fails.')
        raise NotAnOpmonoidalMonad(msg.format(name=m.name, failing=', '.join(sorted(report.failing()))), report)
    return m


def warping_from_opmonoidal_monad(m, objs=None, validate=True):
    """
    v(A,B) = (μ(A)⊗1)ψ(TA,B), v0 = ψ0, k(A) = ρ(TA)η(A) and K = I.
    """
    if validate:
        validate_monad(m, objs)
    T, base = m.T, m.base
    arr = base.tensor.arr

    return SkewLeftWarping(
        T, base.unit,
        NaturalFamily(MONAD, m.psi.core, lambda a, b: arr(m.mu(a), Morphism.identity(T(b))) @ m.psi(T(a), b)),
        m.psi0,
        NaturalFamily(DERIVED, m.eta.core, lambda a: base.right_unit(T(a)) @ m.eta(a)),
        base, name='warp({0})'.format(m.name),
    )


def _right_unit_inverse(base):
    def inverse(x):
        rho = base.right_unit(x)
        inv = rho.inverse()
        if inv is None:
            raise NotRightNormal(_('ρ({x}) of {name} is not invertible.').format(x=x, name=base.name))
        return inv
    return inverse


def opmonoidal_monad_from_warping(w, objs=None):
    """
    For K = I on a right normal base:
        μ(A) = ρ⁻¹(1⊗v0)v(A,I)T(ρ(TA)),   η(A) = ρ⁻¹k(A),
        ψ(A,B) = v(A,B)T(η(A)⊗1),        ψ0 = v0.
    """
    objs = objs or SandboxObjects.default()
    base, T = w.base, w.T
    if w.K != base.unit:
        raise KNotUnit(_('Warping {name} has K = {K}, not the unit.').format(name=w.name, K=w.K))

    rho_inv = _right_unit_inverse(base)
    for x in objs:
        rho_inv(x)
        rho_inv(T(x))

    arr, I = base.tensor.arr, base.unit

    def mu(a):
        ta = T(a)
        return compose(rho_inv(ta), arr(Morphism.identity(ta), w.v0), w.v(a, I), T.arr(base.right_unit(ta)))

    def eta(a):
        return rho_inv(T(a)) @ w.k(a)

    eta_family = NaturalFamily(DERIVED, w.k.core, eta)

    def psi(a, b):
        return w.v(a, b) @ T.arr(arr(eta_family(a), Morphism.identity(b)))

    return OpmonoidalMonad(
        T, NaturalFamily(DERIVED, w.v.core, mu), eta_family,
        NaturalFamily(DERIVED, w.v.core, psi), w.v0,
        base, name='monad({0})'.format(w.name),
    )


def warp_skew_structure(w, objs=None, validate=True):
    """
    The left skew structure A∗B = TA⊗B with unit K,
        α∗ = α(TA,TB,C)(v(A,B)⊗1),   λ∗ = λ(B)(v0⊗1),   ρ∗ = k,
    together with the opmonoidal functor (T, v, v0) from it to the base.
    """
    if validate:
        report = w.check(objs)
        if not report.passed:
            msg = _('{name} is not a skew warping: {failing} fails.')
            raise WarpingInvalid(msg.format(name=w.name, failing=', '.join(sorted(report.failing()))), report)

    base, T = w.base, w.T
    obj, arr = base.tensor.obj, base.tensor.arr

    tensor_product = TensorProduct(
        lambda a, b: obj(T(a), b),
        lambda f, g: arr(T.arr(f), g),
        'T(X)⊗Y',
    )
    structure = SkewStructure(
        base.carrier, tensor_product, w.K,
        assoc=lambda a, b, c: base.assoc(T(a), T(b), c) @ arr(w.v(a, b), Morphism.identity(c)),
        left_unit=lambda b: base.left_unit(b) @ arr(w.v0, Morphism.identity(b)),
        right_unit=w.k,
        name='warped({0})'.format(w.name),
    )
    witness = OpmonoidalFunctorWitness(T, w.v, w.v0, structure, base)
    logger.debug('warped %s into %s', base.name, structure.name)
    return structure, witness


def reversed_monad(m):
    """
    The same monad on the inverse-constraint structure of the reversed base, with
    ψ'(A,B) = ψ(B,A).
    """
    rev_base = dualize(m.base, REV).inverse()
    return OpmonoidalMonad(
        m.T, m.mu, m.eta,
        NaturalFamily(DERIVED, m.psi.core, lambda a, b: m.psi(b, a)),
        m.psi0, rev_base, name='rev({0})'.format(m.name),
    )


def left_and_right_from_opmonoidal(m, objs=None):
    """
    On a monoidal base: the left structure TA⊗B, and the right structure A⊗TB obtained by
    warping the reversed base and reversing back.
    """
    left, _witness = warp_skew_structure(warping_from_opmonoidal_monad(m, objs), objs)
    rev_left, _rev_witness = warp_skew_structure(warping_from_opmonoidal_monad(reversed_monad(m), objs), objs)
    return left, dualize(rev_left, REV)
