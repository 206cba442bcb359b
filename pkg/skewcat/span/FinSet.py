# vim: ts=4:sw=4:expandtabs

from itertools import product

from django.utils.translation import gettext_lazy as _

from .SpanException import SpanException


class FinSet(object):
    """
    An ordered finite set of hashable atoms.
    """
    __slots__ = ('elements', '_index')

    def __init__(self, elements=()):
        elements = tuple(elements)
        index = {}
        for i, element in enumerate(elements):
            if element in index:
                raise SpanException(_('Duplicate element {element!r}.').format(element=element))
            index[element] = i
        self.elements = elements
        self._index = index

    @classmethod
    def point(cls):
        return cls([()])

    def product(self, other):
        return FinSet(product(self.elements, other.elements))

    __mul__ = product

    def index(self, element):
        return self._index[element]

    def __contains__(self, element):
        return element in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, FinSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return 'FinSet({0!r})'.format(list(self.elements))
