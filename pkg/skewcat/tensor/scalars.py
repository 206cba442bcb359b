# vim: ts=4:sw=4:expandtabs
"""
Exact rational scalars. Every matrix entry in skewcat is an element of sympy's QQ,
which keeps numerator and denominator in lowest terms with a positive denominator.
"""

import re

from django.utils.translation import gettext_lazy as _
from sympy import Rational
from sympy.polys.domains import QQ

from .TensorException import ShapeError

SCALAR_RE = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$')

ZERO = QQ(0)
ONE = QQ(1)


def to_scalar(value):
    """
    Coerce an int, a fractions.Fraction, a sympy Rational, a QQ element or a
    "p/q" string into a QQ element.
    """
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, bool):
        raise ShapeError(_('Booleans are not scalars.'))
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Rational):
        return QQ.from_sympy(value)
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return QQ(int(value.numerator), int(value.denominator))

    raise ShapeError(_('Cannot read {value!r} as an exact rational.').format(value=value))


def parse_scalar(text):
    """
    Parse "p/q" or "p". Zero denominators are rejected.
    """
    match = SCALAR_RE.match(text)
    if match is None:
        raise ShapeError(_('"{text}" is not a rational of the form p/q.').format(text=text))

    numerator, denominator = match.groups()
    denominator = int(denominator) if denominator is not None else 1
    if denominator == 0:
        raise ShapeError(_('"{text}" has a zero denominator.').format(text=text))

    return QQ(int(numerator), denominator)


def format_scalar(value):
    """
    Lowest-terms "p/q", or "p" for integers.
    """
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return '{0}/{1}'.format(numerator, denominator)
