# vim: ts=4:sw=4:expandtabs

from django.test import SimpleTestCase

from skewcat.comod import linearize_category_monoidale, linearize_finset, linearize_span, quantum_from_category
from skewcat.fusion.Bimonoid import ASSOCIATIVITY
from skewcat.span import FinSet, Span, category_to_skew_monoidale
from skewcat.span.corpus import categories, category


class LinearizationTestCase(SimpleTestCase):
    """
    Test cases for skewcat.comod.linearization.
    """
    def test_finset(self):
        C = linearize_finset(FinSet(['a', 'b', 'c']), 'k{a,b,c}')
        self.assertEqual(C.dim, 3)
        self.assertTrue(C.is_cocommutative())

    def test_span(self):
        X, Y = FinSet(['x0', 'x1']), FinSet(['y'])
        span = Span(X, Y, FinSet(['p', 'q', 'r']), {'p': 'x0', 'q': 'x1', 'r': 'x1'}, {'p': 'y', 'q': 'y', 'r': 'y'},
                    'm')
        m = linearize_span(span)
        self.assertEqual((m.src.dim, m.tgt.dim, m.dim), (2, 1, 3))
        self.assertTrue(m.check().passed)
        # l(r) = x1⊗r
        self.assertEqual(m.left.column(2), {1 * 3 + 2: 1})

    def test_categories_are_quantum_categories(self):
        for c in categories():
            q = quantum_from_category(c)
            self.assertTrue(q.check().passed, c.name)
            q.check_structure()

    def test_broken_category(self):
        q = quantum_from_category(category('Z/3').mutate('g', 'g', 'e'))
        self.assertEqual(q.check().failing(), {ASSOCIATIVITY})

    def test_constraints_match_span(self):
        """
        On basis vectors the Comod constraints are the Span constraints of the same category.
        """
        for c in categories():
            s = linearize_category_monoidale(c)
            span = category_to_skew_monoidale(c)
            objects, morphisms = c.objects, c.morphisms
            n = len(morphisms)

            for f, g in span.assoc.dom.apex:
                g2, h = span.assoc((f, g))
                column = morphisms.index(f) * n + morphisms.index(g)
                self.assertEqual(s.assoc.column(column), {morphisms.index(g2) * n + morphisms.index(h): 1})

            for f in morphisms:
                self.assertEqual(s.left_unit.column(morphisms.index(f)), {objects.index(c.target[f]): 1})
            for x in objects:
                _x, e = span.right_unit(x)
                self.assertEqual(s.right_unit.column(objects.index(x)), {morphisms.index(e): 1})
