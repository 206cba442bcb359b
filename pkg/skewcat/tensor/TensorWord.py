# vim: ts=4:sw=4:expandtabs

from functools import reduce
from operator import mul

from django.utils.translation import gettext_lazy as _

from .GenSpace import GenSpace
from .TensorException import ShapeError


class TensorWord(object):
    """
    An ordered tensor product of generator spaces. The empty word is the unit I.
    Words are strictly associative: concatenation is the tensor product.
    """
    __slots__ = ('factors',)

    def __init__(self, factors=()):
        flat = []
        for factor in factors:
            if isinstance(factor, TensorWord):
                flat.extend(factor.factors)
            elif isinstance(factor, GenSpace):
                flat.append(factor)
            else:
                raise ShapeError(_('{factor!r} is not a space or a word.').format(factor=factor))
        object.__setattr__(self, 'factors', tuple(flat))

    def __setattr__(self, key, value):
        raise AttributeError('TensorWord is immutable.')

    @classmethod
    def of(cls, *factors):
        return cls(factors)

    @classmethod
    def unit(cls):
        return cls(())

    @property
    def dim(self):
        return reduce(mul, (f.dim for f in self.factors), 1)

    @property
    def names(self):
        return [f.name for f in self.factors]

    @property
    def is_unit(self):
        return not self.factors

    def parities(self):
        """
        Parity of every flattened basis vector, leftmost factor most significant.
        """
        parities = [0]
        for factor in self.factors:
            parities = [
                (p + factor.parity(i)) % 2
                for p in parities for i in range(factor.dim)
            ]
        return parities

    def __add__(self, other):
        if isinstance(other, GenSpace):
            other = TensorWord.of(other)
        return TensorWord(self.factors + other.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __eq__(self, other):
        return isinstance(other, TensorWord) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        if not self.factors:
            return 'I'
        return ' (x) '.join(self.names)
