# vim: ts=4:sw=4:expandtabs

from django.utils.translation import gettext_lazy as _

from .FinSet import FinSet
from .SpanException import BoundaryMismatch


class Span(object):
    """
    src <-left- apex -right-> tgt, with both legs stored as dicts on the apex.
    """
    def __init__(self, src, tgt, apex, left, right, name=''):
        self.src = src
        self.tgt = tgt
        self.apex = apex
        self.left = dict(left)
        self.right = dict(right)
        self.name = name

        for element in apex:
            if element not in self.left or self.left[element] not in src:
                raise BoundaryMismatch(_('Left leg of {name} is not a function into its source at {element!r}.')
                                       .format(name=name, element=element))
            if element not in self.right or self.right[element] not in tgt:
                raise BoundaryMismatch(_('Right leg of {name} is not a function into its target at {element!r}.')
                                       .format(name=name, element=element))

    @classmethod
    def identity(cls, finset):
        return cls(finset, finset, finset, {x: x for x in finset}, {x: x for x in finset}, 'id')

    def __repr__(self):
        return '<Span {0}: |apex| = {1}>'.format(self.name, len(self.apex))


def span_compose(n, m):
    """
    n∘m by pullback: pairs (a, b) of apex elements with m.right(a) = n.left(b), enumerated
    in the lexicographic order of the apexes.
    """
    if m.tgt != n.src:
        raise BoundaryMismatch(_('Cannot compose {n} after {m}: boundaries differ.').format(n=n, m=m))

    by_left = {}
    for b in n.apex:
        by_left.setdefault(n.left[b], []).append(b)

    apex = FinSet((a, b) for a in m.apex for b in by_left.get(m.right[a], ()))
    return Span(
        m.src, n.tgt, apex,
        {(a, b): m.left[a] for a, b in apex},
        {(a, b): n.right[b] for a, b in apex},
        '{0}∘{1}'.format(n.name, m.name),
    )


def span_product(m, n):
    """
    m×n on the cartesian products of sources, targets and apexes.
    """
    apex = m.apex * n.apex
    return Span(
        m.src * n.src, m.tgt * n.tgt, apex,
        {(a, b): (m.left[a], n.left[b]) for a, b in apex},
        {(a, b): (m.right[a], n.right[b]) for a, b in apex},
        '{0}×{1}'.format(m.name, n.name),
    )
