# vim: ts=4:sw=4:expandtabs

from random import Random

from django.test import SimpleTestCase, override_settings

from skewcat.skew import (
    PENTAGON, RIGHT_UNIT, SKEW_AXIOMS, TRIANGLE, Classification, REV, UnsupportedCarrier,
)
from skewcat.span import (
    MONAD_ASSOC, MONAD_LAWS, MONAD_LEFT_UNIT, MONAD_RIGHT_UNIT, NotACategory, NotCategoryShaped,
    category_to_monad_in_span, category_to_skew_monoidale, check_monad_in_span, skew_monoidale_to_category,
    tensor_span, unit_span,
)
from skewcat.span.corpus import categories, category
from skewcat.tests.factories import RandomCategoryFactory


def encodings(c):
    """
    The verdicts of the three readings of c: category laws, monad in Span, skew monoidale.
    """
    return (
        c.check(),
        check_monad_in_span(category_to_monad_in_span(c, validate=False)),
        category_to_skew_monoidale(c, validate=False).check(),
    )


class DictionaryTestCase(SimpleTestCase):
    """
    Test cases for the passages between categories, monads in Span and skew monoidales in Span.
    """
    def test_corpus_agrees(self):
        for c in categories():
            category_report, monad_report, skew_report = encodings(c)
            self.assertTrue(category_report.passed, c.name)
            self.assertEqual(monad_report.names(), list(MONAD_LAWS))
            self.assertTrue(monad_report.passed, c.name)
            self.assertEqual(skew_report.names(), list(SKEW_AXIOMS))
            self.assertTrue(skew_report.passed, c.name)

    def test_mutations_agree(self):
        test_cases = [
            (category('Z/3').mutate('g', 'g', 'e'), {MONAD_ASSOC}, {PENTAGON}),
            (category('Z/2').with_identity('*', 'g'), {MONAD_LEFT_UNIT, MONAD_RIGHT_UNIT}, {TRIANGLE, RIGHT_UNIT}),
        ]
        for c, monad_failing, skew_failing in test_cases:
            category_report, monad_report, skew_report = encodings(c)
            self.assertFalse(category_report.passed, c.name)
            self.assertEqual(monad_report.failing(), monad_failing, c.name)
            self.assertEqual(skew_report.failing(), skew_failing, c.name)

    @override_settings(SKEWCAT_FUZZ_MAX_OBJECTS=4, SKEWCAT_FUZZ_MAX_MORPHISMS=10)
    def test_random_categories_agree(self):
        rng = Random(7)
        shapes = set()
        for _i in range(50):
            c = RandomCategoryFactory(rng=rng)
            shapes.add('poset' if c.name.startswith('poset') else ('one-object' if len(c.objects) == 1 else 'quiver'))
            self.assertLessEqual(len(c.morphisms), 10)
            verdicts = [report.passed for report in encodings(c)]
            self.assertEqual(verdicts, [True, True, True], c.name)
            self.assertEqual(skew_monoidale_to_category(category_to_skew_monoidale(c)), c)
        self.assertEqual(shapes, {'poset', 'one-object', 'quiver'})

    def test_roundtrip(self):
        for c in categories():
            s = category_to_skew_monoidale(c)
            self.assertEqual(skew_monoidale_to_category(s), c, c.name)

    def test_shape(self):
        c = category('arrow')
        p, j = tensor_span(c), unit_span(c)
        self.assertEqual(p.src, c.objects * c.objects)
        self.assertEqual(p.left['a->b'], ('a', 'b'))
        self.assertEqual(p.right['a->b'], 'b')
        self.assertEqual(len(j.apex), len(c.objects))

    def test_constraints(self):
        c = category('Z/3')
        s = category_to_skew_monoidale(c)
        self.assertEqual(s.assoc(('g', 'g')), ('g', 'g2'))
        self.assertEqual(s.left_unit(('*', 'g2')), '*')
        self.assertEqual(s.right_unit('*'), ('*', 'e'))

    def test_classification(self):
        test_cases = [
            ('discrete(2)', Classification(True, True, True)),
            ('Z/3', Classification(True, False, False)),
        ]
        for name, expected in test_cases:
            self.assertEqual(category_to_skew_monoidale(category(name)).classify(), expected, name)

    def test_rejects(self):
        broken = category('Z/3').mutate('g', 'g', 'e')
        with self.assertRaises(NotACategory):
            category_to_skew_monoidale(broken)
        with self.assertRaises(NotACategory):
            category_to_monad_in_span(broken)
        with self.assertRaises(NotCategoryShaped) as cm:
            skew_monoidale_to_category(category_to_skew_monoidale(broken, validate=False))
        self.assertEqual(cm.exception.report.failing(), {PENTAGON})

    def test_no_duals(self):
        s = category_to_skew_monoidale(category('Z/2'))
        with self.assertRaises(UnsupportedCarrier):
            s.dualize(REV)
        with self.assertRaises(UnsupportedCarrier):
            s.inverse()
