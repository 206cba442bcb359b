# vim: ts=4:sw=4:expandtabs

from django.test import SimpleTestCase

from skewcat.comod import (
    COMODULE_LAWS, BoundaryMismatch, Comodule, ComoduleMap, NotAComodule, NotAComoduleMap, cotensor,
    find_isomorphism, hom_space, linearize_finset, linearize_span, tensor_comodules,
)
from skewcat.comod.corpus import coalgebra, coalgebras
from skewcat.span import Span, span_compose
from skewcat.span.corpus import categories
from skewcat.tensor import Morphism


def morphism_span(c):
    """
    The objects <-s- morphisms -t-> objects span of a category.
    """
    return Span(c.objects, c.objects, c.morphisms, c.source, c.target, 'A')


class ComoduleTestCase(SimpleTestCase):
    """
    Test cases for skewcat.comod.Comodule and cotensor composition.
    """
    def test_identity(self):
        for C in coalgebras():
            report = Comodule.identity(C).check()
            self.assertTrue(report.passed, C.name)
            self.assertEqual(report.names(), list(COMODULE_LAWS))

    def test_shapes(self):
        C = coalgebra('k{x,y}')
        with self.assertRaises(NotAComodule):
            Comodule(C, C, C.word, Morphism.identity(C.word), C.comul, 'bad')

    def test_broken_coaction(self):
        C = coalgebra('k{x,y}')
        broken = Comodule(C, C, C.word, C.comul.scale(2), C.comul, '2δ')
        self.assertFalse(broken.check().passed)
        with self.assertRaises(NotAComodule):
            broken.validate()

    def test_cotensor_counts_composable_pairs(self):
        """
        Cotensoring linearized spans is linearized span composition.
        """
        for c in categories():
            K = linearize_finset(c.objects, 'k{{{0}₀}}'.format(c.name))
            A = morphism_span(c)
            m = linearize_span(A, K, K)
            mm = cotensor(m, m)
            self.assertEqual(mm.dim, len(span_compose(A, A).apex), c.name)
            self.assertTrue(mm.check().passed, c.name)

    def test_cotensor_with_identity(self):
        C = coalgebra('D2')
        one = Comodule.identity(C)
        composite = cotensor(one, one)
        self.assertEqual(composite.dim, C.dim)
        self.assertIsNotNone(find_isomorphism(composite, one))

    def test_cotensor_boundaries(self):
        with self.assertRaises(BoundaryMismatch):
            cotensor(Comodule.identity(coalgebra('k{x,y}')), Comodule.identity(coalgebra('D2')))

    def test_tensor_comodules(self):
        m = Comodule.identity(coalgebra('k{x,y}'))
        n = Comodule.identity(coalgebra('D2'))
        mn = tensor_comodules(m, n)
        self.assertEqual(mn.dim, 6)
        self.assertTrue(mn.check().passed)


class ComoduleMapTestCase(SimpleTestCase):
    """
    Test cases for skewcat.comod.ComoduleMap, hom_space and find_isomorphism.
    """
    def test_hom_space(self):
        one = Comodule.identity(coalgebra('k{x,y}'))
        basis = hom_space(one, one)
        self.assertEqual(len(basis), 2)
        for f in basis:
            ComoduleMap(one, one, f)

        self.assertEqual(len(hom_space(Comodule.identity(coalgebra('D2')), Comodule.identity(coalgebra('D2')))), 3)

    def test_find_isomorphism(self):
        one = Comodule.identity(coalgebra('k[a->b]'))
        iso = find_isomorphism(one, one)
        self.assertIsNotNone(iso)
        self.assertTrue(iso.is_invertible())
        self.assertEqual(iso.then(iso.inverse()), ComoduleMap.identity(one))

    def test_not_a_comodule_map(self):
        C = coalgebra('k{x,y}')
        one = Comodule.identity(C)
        swap = Morphism.from_rows(C.word, C.word, [[0, 1], [1, 0]])
        with self.assertRaises(NotAComoduleMap):
            ComoduleMap(one, one, swap)
