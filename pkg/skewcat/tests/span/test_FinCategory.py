# vim: ts=4:sw=4:expandtabs

from django.test import SimpleTestCase

from skewcat.span import (
    ASSOCIATIVITY, CATEGORY_LAWS, IDENTITY_TYPED, LEFT_IDENTITY, RIGHT_IDENTITY, WELL_TYPED, FinCategory,
    NotACategory,
)
from skewcat.span.corpus import categories, category, parallel_arrows, right_zero_monoid, truncated_sum


class FinCategoryTestCase(SimpleTestCase):
    """
    Test cases for skewcat.span.FinCategory.
    """
    def test_corpus(self):
        for c in categories():
            report = c.check()
            self.assertTrue(report.passed, c.name)
            self.assertEqual(report.names(), list(CATEGORY_LAWS))

    def test_sizes(self):
        test_cases = [
            ('discrete(2)', 2, 2, 2),
            ('Z/3', 1, 3, 9),
            ('arrow', 2, 3, 4),
            ('square', 4, 9, 16),
            ('parallel(2)', 2, 4, 6),
            ('trunc(3)', 1, 3, 9),
        ]
        for name, objects, morphisms, pairs in test_cases:
            c = category(name)
            self.assertEqual(
                (len(c.objects), len(c.morphisms), len(c.composable_pairs())),
                (objects, morphisms, pairs), name,
            )

    def test_families(self):
        test_cases = [
            (parallel_arrows(3), 5, 8),
            (parallel_arrows(2, tail=True), 8, 15),
            (truncated_sum(4), 4, 16),
            (right_zero_monoid(2), 3, 9),
        ]
        for c, morphisms, pairs in test_cases:
            self.assertTrue(c.check().passed, c.name)
            self.assertEqual((len(c.morphisms), len(c.composable_pairs())), (morphisms, pairs), c.name)

        fork = parallel_arrows(2, tail=True)
        self.assertEqual(fork.compose('f2', 'h'), 'f2;h')
        self.assertEqual(truncated_sum(4).compose('n2', 'n3'), 'n3')
        self.assertEqual(right_zero_monoid(2).compose('z2', 'z1'), 'z1')

    def test_table_roundtrip(self):
        for c in categories():
            rebuilt = FinCategory.from_table(c.objects, c.morphisms, c.source, c.target, c.identity, c.table(),
                                             name=c.name)
            self.assertEqual(rebuilt, c)

    def test_mutations(self):
        test_cases = [
            (category('Z/3').mutate('g', 'g', 'e'), {ASSOCIATIVITY}),
            (category('Z/2').with_identity('*', 'g'), {LEFT_IDENTITY, RIGHT_IDENTITY}),
            (category('arrow').mutate('a->a', 'a->b', 'b->b'), {WELL_TYPED}),
            (category('arrow').with_identity('b', 'a->b'), {IDENTITY_TYPED}),
        ]
        for c, failing in test_cases:
            self.assertEqual(c.check().failing(), failing, c.name)
            with self.assertRaises(NotACategory) as cm:
                c.validate()
            self.assertEqual(cm.exception.report.failing(), failing)

    def test_mutation_names(self):
        self.assertEqual(category('Z/3').mutate('g', 'g', 'e').name, 'Z/3[g;g:=e]')

    def test_composition(self):
        c = category('Z/3')
        self.assertEqual(c.compose('g', 'g2'), 'e')
        self.assertEqual(category('arrow').compose('a->a', 'a->b'), 'a->b')
