# vim: ts=4:sw=4:expandtabs

from itertools import combinations

from django.test import SimpleTestCase

from skewcat.comod import (
    MONOIDALE_AXIOMS, SNAKE_LAWS, Biduality, Comodule, associativity_legs, bidual, canonical_monoidale,
    check_monoidale, counit_comodule, cotensor, find_isomorphism, monoidale_of, tensor_comodules,
    transpose_via_biduality, unit_comodule,
)
from skewcat.comod.corpus import coalgebra, coalgebras
from skewcat.comod.duality import MONOIDALE_ASSOC


class BidualityTestCase(SimpleTestCase):
    """
    Test cases for skewcat.comod.Biduality.
    """
    def test_snakes(self):
        for C in coalgebras():
            duality = Biduality.of(C)
            report = duality.check()
            self.assertTrue(report.passed, C.name)
            self.assertEqual(report.names(), list(SNAKE_LAWS))
            if not C.is_unit:
                self.assertEqual(set(duality.isos), set(SNAKE_LAWS))

    def test_unit_and_counit(self):
        C = coalgebra('k[a->b]')
        duality = bidual(C)
        self.assertEqual(duality.C_op, C.co_opposite())
        self.assertEqual(duality.n.dim, C.dim)
        self.assertEqual(duality.e.dim, C.dim)
        self.assertTrue(duality.n.src.is_unit)
        self.assertTrue(duality.e.tgt.is_unit)
        self.assertEqual(duality.enveloping.dim, C.dim ** 2)


class MonoidaleTestCase(SimpleTestCase):
    """
    Test cases for the canonical monoidale on C°⊗C.
    """
    def test_canonical_monoidale(self):
        for name in ('I', 'k{x,y}'):
            monoidale = canonical_monoidale(coalgebra(name))
            report = check_monoidale(monoidale)
            self.assertTrue(report.passed, name)
            self.assertEqual(report.names(), list(MONOIDALE_AXIOMS))
            self.assertEqual(set(monoidale.isos), set(MONOIDALE_AXIOMS))

    def test_associativity(self):
        for C in coalgebras():
            monoidale = canonical_monoidale(C)
            report = check_monoidale(monoidale, axioms=(MONOIDALE_ASSOC,))
            self.assertTrue(report.passed, C.name)
            self.assertEqual(report.names(), [MONOIDALE_ASSOC])

    def test_path_coalgebra_associativity(self):
        C = coalgebra('k[a->b]')
        monoidale = canonical_monoidale(C)
        report = check_monoidale(monoidale, axioms=(MONOIDALE_ASSOC,))
        self.assertTrue(report.passed)
        # one iso per group of legs, each with C as underlying space
        isos = monoidale.isos[MONOIDALE_ASSOC]
        self.assertEqual(len(isos), 4)
        self.assertEqual([iso.dom.dim for iso in isos], [C.dim] * 4)

    def test_legs_match_the_full_composite(self):
        C = coalgebra('k{x,y}')
        monoidale = canonical_monoidale(C)
        p, one = monoidale.p, Comodule.identity(monoidale.carrier)
        outer, inner = associativity_legs(monoidale)
        for legs, composite in ((outer, cotensor(tensor_comodules(p, one), p)),
                                (inner, cotensor(tensor_comodules(one, p), p))):
            dim = 1
            for leg in legs:
                dim *= leg.dim
            self.assertEqual(composite.dim, dim)
            self.assertEqual(dim, C.dim ** 4)

    def test_broken_associativity(self):
        C = coalgebra('k{x,y}')
        duality = bidual(C)
        # C° -> I -> C° in place of the identity on C°
        through_unit = tensor_comodules(counit_comodule(duality.C_op), unit_comodule(duality.C_op))
        monoidale = monoidale_of(duality, through_unit, duality.e, Comodule.identity(C), duality.n)
        report = check_monoidale(monoidale, axioms=(MONOIDALE_ASSOC,))
        self.assertEqual(report.failing(), {MONOIDALE_ASSOC})

        result = report[MONOIDALE_ASSOC]
        self.assertEqual(result.witness, ['0'])
        self.assertEqual((result.lhs['dim'], result.rhs['dim']), (C.dim ** 3, C.dim ** 2))
        self.assertNotIn(MONOIDALE_ASSOC, monoidale.isos)

    def test_transpose(self):
        C = coalgebra('k{x,y}')
        monoidale = canonical_monoidale(C)
        one = Comodule.identity(monoidale.carrier)
        transposed = transpose_via_biduality(one, C, monoidale.duality)
        self.assertEqual(transposed.dim, C.dim ** 2)
        self.assertTrue(transposed.check().passed)

    def test_transpose_is_faithful(self):
        C = coalgebra('k{x,y}')
        duality = bidual(C)
        one_c, one_op = Comodule.identity(C), Comodule.identity(duality.C_op)
        through_c = tensor_comodules(counit_comodule(C), unit_comodule(C))
        through_op = tensor_comodules(counit_comodule(duality.C_op), unit_comodule(duality.C_op))
        comodules = [
            Comodule.identity(duality.enveloping),
            tensor_comodules(one_op, through_c, name='1⊗ε*ε_*'),
            tensor_comodules(through_op, one_c, name='ε*ε_*⊗1'),
            tensor_comodules(through_op, through_c, name='ε*ε_*⊗ε*ε_*'),
        ]
        transposes = [transpose_via_biduality(t, C, duality) for t in comodules]
        for t in transposes:
            self.assertTrue(t.check().passed, t.name)

        for (s, t), (s_hat, t_hat) in zip(combinations(comodules, 2), combinations(transposes, 2)):
            self.assertIsNone(find_isomorphism(s, t))
            self.assertIsNone(find_isomorphism(s_hat, t_hat), '{0} {1}'.format(s.name, t.name))
