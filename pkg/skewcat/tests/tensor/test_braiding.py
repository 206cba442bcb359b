# vim: ts=4:sw=4:expandtabs

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured
from django.test import SimpleTestCase, override_settings
from hypothesis import given, settings as hypothesis_settings, strategies as st

from skewcat.tensor import (
    GenSpace, KoszulBraiding, Morphism, TensorWord, braiding, braiding_inverse, compose, get_braiding, tensor,
)

U = TensorWord.of(GenSpace('U', 2))
S = TensorWord.of(GenSpace('S', 2, grading=[0, 1]))
W = TensorWord.of(GenSpace('W', 3))
T = TensorWord.of(GenSpace('T', 3, grading=[0, 1, 1]))

SMALL = st.integers(min_value=-3, max_value=3)


def matrices(height, width):
    return st.lists(st.lists(SMALL, min_size=width, max_size=width), min_size=height, max_size=height)


def even(word, blocks):
    """
    A parity preserving endomorphism of word, given one square block per parity.
    """
    parities = word.parities()
    rows = [[0] * word.dim for _k in range(word.dim)]
    for parity, block in enumerate(blocks):
        positions = [k for k, p in enumerate(parities) if p == parity]
        for i, row in zip(positions, block):
            for j, entry in zip(positions, row):
                rows[i][j] = entry
    return Morphism.from_rows(word, word, rows)


class NotABraiding(object):
    pass


class KoszulBraidingTestCase(SimpleTestCase):
    """
    Test cases for skewcat.tensor.KoszulBraiding.
    """
    def test_plain_swap(self):
        c = braiding(U, W)
        self.assertEqual(c.dom, U + W)
        self.assertEqual(c.cod, W + U)
        # e_1 ⊗ f_2 -> f_2 ⊗ e_1
        self.assertEqual(c.column(1 * 3 + 2), {2 * 2 + 1: 1})

    def test_sign_on_odd_pairs(self):
        c = braiding(S, S)
        self.assertEqual(c.column(1 * 2 + 1), {1 * 2 + 1: -1})
        self.assertEqual(c.column(0 * 2 + 1), {1 * 2 + 0: 1})

    def test_symmetric(self):
        for left, right in ((U, W), (S, S), (S, U)):
            self.assertEqual(braiding(right, left) @ braiding(left, right), Morphism.identity(left + right))
            self.assertEqual(braiding_inverse(left, right), braiding(right, left))

    def test_hexagon(self):
        for x, y, z in ((U, S, W), (S, S, S)):
            lhs = braiding(x, y + z)
            rhs = compose(tensor(Morphism.identity(y), braiding(x, z)), tensor(braiding(x, y), Morphism.identity(z)))
            self.assertEqual(lhs, rhs)

    def test_unit_braiding_is_identity(self):
        self.assertEqual(braiding(TensorWord.unit(), U), Morphism.identity(U))

    @hypothesis_settings(max_examples=30, deadline=None)
    @given(matrices(3, 2), matrices(2, 3))
    def test_natural_in_both_factors(self, a, b):
        f = Morphism.from_rows(U, W, a)
        g = Morphism.from_rows(W, U, b)
        self.assertEqual(braiding(W, U) @ tensor(f, g), tensor(g, f) @ braiding(U, W))

    @hypothesis_settings(max_examples=30, deadline=None)
    @given(matrices(1, 1), matrices(1, 1), matrices(1, 1), matrices(2, 2))
    def test_natural_for_even_maps(self, a, b, c, d):
        f, g = even(S, (a, b)), even(T, (c, d))
        self.assertEqual(braiding(S, T) @ tensor(f, g), tensor(g, f) @ braiding(S, T))

    def test_odd_map_breaks_naturality(self):
        # exchanges the parities of S
        f = Morphism.from_rows(S, S, [[0, 1], [1, 0]])
        g = Morphism.from_rows(S, S, [[0, 1], [1, 0]])
        self.assertNotEqual(braiding(S, S) @ tensor(f, g), tensor(g, f) @ braiding(S, S))


class GetBraidingTestCase(SimpleTestCase):
    """
    Test cases for skewcat.tensor.get_braiding.
    """
    def test_default(self):
        self.assertIsInstance(get_braiding(), KoszulBraiding)

    @override_settings(SKEWCAT_BRAIDING_CLASS='skewcat.tensor.nowhere.Braiding')
    def test_missing_module(self):
        with self.assertRaises(ImproperlyConfigured):
            get_braiding()

    @override_settings(SKEWCAT_BRAIDING_CLASS='skewcat.tests.tensor.test_braiding.NotABraiding')
    def test_wrong_class(self):
        with self.assertRaises(ImproperlyConfigured):
            get_braiding()

    @override_settings()
    def test_undeclared(self):
        del settings.SKEWCAT_BRAIDING_CLASS
        with self.assertRaises(ImproperlyConfigured):
            get_braiding()
