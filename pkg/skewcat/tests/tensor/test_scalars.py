# vim: ts=4:sw=4:expandtabs

from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, strategies as st
from sympy import Rational

from skewcat.tensor import ShapeError, format_scalar, parse_scalar, to_scalar


class ScalarsTestCase(SimpleTestCase):
    """
    Test cases for skewcat.tensor.scalars.
    """
    def test_parse(self):
        test_cases = [
            ('3', '3'),
            ('-3', '-3'),
            ('2/4', '1/2'),
            (' -6 / 4 ', '-3/2'),
            ('0/7', '0'),
        ]
        for text, expected in test_cases:
            self.assertEqual(format_scalar(parse_scalar(text)), expected)

    def test_parse_rejects(self):
        for text in ('1/0', 'a/b', '1.5', '', '1/-2'):
            with self.assertRaises(ShapeError):
                parse_scalar(text)

    def test_to_scalar(self):
        self.assertEqual(to_scalar(Fraction(2, 6)), parse_scalar('1/3'))
        self.assertEqual(to_scalar(Rational(-1, 2)), parse_scalar('-1/2'))
        self.assertEqual(to_scalar(4), parse_scalar('4'))
        with self.assertRaises(ShapeError):
            to_scalar(True)
        with self.assertRaises(ShapeError):
            to_scalar(0.5)

    @given(st.fractions())
    def test_format_parse(self, value):
        self.assertEqual(parse_scalar(format_scalar(to_scalar(value))), to_scalar(value))
