# vim: ts=4:sw=4:expandtabs

from django.test import SimpleTestCase

from skewcat.fusion import bimonoid_to_tricocycloid
from skewcat.fusion.corpus import bimonoid
from skewcat.skew import SKEW_AXIOMS, Classification, SandboxObjects, monoidal_structure
from skewcat.tensor import GenSpace, Morphism, TensorWord
from skewcat.warping import (
    OPMONOIDAL_AXIOMS, WARP_UNIT_RIGHT, WARP_UNIT_UNIT, WARPING_AXIOMS, KNotUnit, NotADuality,
    NotAnOpmonoidalMonad, WarpingInvalid, check_duality, check_warping_axioms, identity_monad,
    left_and_right_from_opmonoidal, monad_from_bimonoid, opmonoidal_monad_from_warping, trivial_warping,
    validate_monad, warp_skew_structure, warping_from_duality, warping_from_opmonoidal_monad,
    warping_from_tricocycloid,
)

K, R = GenSpace('K', 2), GenSpace('R', 2)


def pairing(scale=1):
    """
    The evaluation pairing of a plane with its dual, η = e₀⊗e₀ + e₁⊗e₁.
    """
    eta = Morphism.from_rows(TensorWord.unit(), TensorWord([R, K]), [[1], [0], [0], [1]])
    eps = Morphism.from_rows(TensorWord([K, R]), TensorWord.unit(), [[scale, 0, 0, scale]])
    return K, R, eta, eps


class WarpingTestCase(SimpleTestCase):
    """
    Test cases for skewcat.warping.SkewLeftWarping and its constructions.
    """
    def test_trivial_warping(self):
        w = trivial_warping()
        report = w.check()
        self.assertTrue(report.passed)
        self.assertEqual(report.names(), list(WARPING_AXIOMS))
        self.assertTrue(w.is_hopf())

    def test_tricocycloid_warpings_pass(self):
        for name in ('trivial', 'k[Z/2]', 'k[{1,e}]'):
            w = warping_from_tricocycloid(bimonoid_to_tricocycloid(bimonoid(name)))
            self.assertTrue(check_warping_axioms(w).passed, name)

    def test_hopf_warping(self):
        self.assertTrue(warping_from_tricocycloid(bimonoid_to_tricocycloid(bimonoid('k[Z/2]'))).is_hopf())
        self.assertFalse(warping_from_tricocycloid(bimonoid_to_tricocycloid(bimonoid('k[{1,e}]'))).is_hopf())

    def test_zero_counit(self):
        w = warping_from_tricocycloid(bimonoid_to_tricocycloid(bimonoid('k[Z/2]')))
        mutated = w.replace(v0=w.v0.scale(0), name='v0 := 0')
        self.assertEqual(mutated.check().failing(), {WARP_UNIT_RIGHT, WARP_UNIT_UNIT})

        with self.assertRaises(WarpingInvalid) as cm:
            warp_skew_structure(mutated)
        self.assertEqual(cm.exception.report.failing(), {WARP_UNIT_RIGHT, WARP_UNIT_UNIT})

    def test_duality_warping(self):
        _K, _R, eta, eps = pairing()
        self.assertTrue(check_duality(TensorWord.of(K), TensorWord.of(R), eta, eps).passed)
        w = warping_from_duality(*pairing())
        self.assertTrue(w.check().passed)
        self.assertTrue(w.is_hopf())

    def test_duality_rejects_bad_pairing(self):
        with self.assertRaises(NotADuality) as cm:
            warping_from_duality(*pairing(scale=2))
        self.assertFalse(cm.exception.report.passed)


class WarpedStructureTestCase(SimpleTestCase):
    """
    Test cases for skewcat.warping.warp_skew_structure.
    """
    def test_warped_structures_pass(self):
        test_cases = [
            trivial_warping(),
            warping_from_tricocycloid(bimonoid_to_tricocycloid(bimonoid('k[Z/2]'))),
            warping_from_duality(*pairing()),
        ]
        for w in test_cases:
            structure, witness = warp_skew_structure(w)
            report = structure.check()
            self.assertTrue(report.passed, w.name)
            self.assertEqual(report.names(), list(SKEW_AXIOMS))

            witness_report = witness.check()
            self.assertTrue(witness_report.passed, w.name)
            self.assertEqual(witness_report.names(), list(OPMONOIDAL_AXIOMS))

    def test_classification(self):
        structure, _witness = warp_skew_structure(warping_from_duality(*pairing()))
        self.assertEqual(structure.classify(), Classification(True, False, False))
        self.assertTrue(monoidal_structure().classify().monoidal)

        structure, _witness = warp_skew_structure(trivial_warping())
        self.assertTrue(structure.classify().monoidal)

    def test_left_and_right_structures(self):
        objs = SandboxObjects.small()
        left, right = left_and_right_from_opmonoidal(monad_from_bimonoid(bimonoid('k[Z/2]')), objs)
        self.assertTrue(left.check(objs).passed)
        self.assertTrue(right.check(objs).passed)
        self.assertNotEqual(left.chirality, right.chirality)


class OpmonoidalMonadTestCase(SimpleTestCase):
    """
    Test cases for the passage between opmonoidal monads and warpings with K = I.
    """
    def test_monads_pass(self):
        self.assertTrue(identity_monad().check().passed)
        for name in ('trivial', 'k[Z/2]', 'k[{1,e}]'):
            m = monad_from_bimonoid(bimonoid(name))
            self.assertIs(validate_monad(m), m)

    def test_broken_monad(self):
        m = monad_from_bimonoid(bimonoid('k[Z/2]'))
        broken = type(m)(m.T, m.mu, m.eta, m.psi, m.psi0.scale(2), m.base, name='2ψ0')
        with self.assertRaises(NotAnOpmonoidalMonad):
            validate_monad(broken)
        with self.assertRaises(NotAnOpmonoidalMonad):
            warping_from_opmonoidal_monad(broken)

    def test_factorization(self):
        """
        Warping a bimonoid's tricocycloid and warping its monad give the same warping.
        """
        for name in ('trivial', 'k[Z/2]', 'k[{1,e}]', 'H4'):
            b = bimonoid(name)
            via_tricocycloid = warping_from_tricocycloid(bimonoid_to_tricocycloid(b))
            via_monad = warping_from_opmonoidal_monad(monad_from_bimonoid(b))
            self.assertTrue(via_tricocycloid.same_as(via_monad), name)

    def test_roundtrips(self):
        for name in ('trivial', 'k[Z/2]', 'k[{1,e}]'):
            m = monad_from_bimonoid(bimonoid(name))
            w = warping_from_opmonoidal_monad(m)
            self.assertTrue(opmonoidal_monad_from_warping(w).same_as(m), name)
            self.assertTrue(warping_from_opmonoidal_monad(opmonoidal_monad_from_warping(w)).same_as(w), name)

    def test_needs_unit_k(self):
        with self.assertRaises(KNotUnit):
            opmonoidal_monad_from_warping(warping_from_duality(*pairing()))
