# vim: ts=4:sw=4:expandtabs

from django.utils.translation import gettext_lazy as _

from .Span import span_compose
from .SpanException import BoundaryMismatch


class SpanMap(object):
    """
    A 2-cell of spans: a function between apexes commuting with both legs.
    """
    def __init__(self, dom, cod, mapping, name=''):
        if dom.src != cod.src or dom.tgt != cod.tgt:
            raise BoundaryMismatch(_('{name}: spans {dom} and {cod} are not parallel.')
                                   .format(name=name, dom=dom, cod=cod))
        self.dom = dom
        self.cod = cod
        self.mapping = dict(mapping)
        self.name = name

        for a in dom.apex:
            if a not in self.mapping or self.mapping[a] not in cod.apex:
                raise BoundaryMismatch(_('{name} is undefined or leaves the target apex at {element!r}.')
                                       .format(name=name, element=a))
            image = self.mapping[a]
            if dom.left[a] != cod.left[image] or dom.right[a] != cod.right[image]:
                raise BoundaryMismatch(_('{name} does not preserve the legs at {element!r}.')
                                       .format(name=name, element=a))

    @classmethod
    def identity(cls, span):
        return cls(span, span, {a: a for a in span.apex}, 'id')

    def __call__(self, element):
        return self.mapping[element]

    def then(self, other):
        """
        Vertical composite: self followed by other.
        """
        if self.cod.apex != other.dom.apex:
            raise BoundaryMismatch(_('Cannot stack {first} on {second}.').format(first=self, second=other))
        return SpanMap(self.dom, other.cod, {a: other(self(a)) for a in self.dom.apex},
                       '{0}.{1}'.format(self.name, other.name))

    def is_bijective(self):
        return len(self.dom.apex) == len(self.cod.apex) == len(set(self.mapping.values()))

    def __eq__(self, other):
        return (
            isinstance(other, SpanMap)
            and self.dom.apex == other.dom.apex and self.cod.apex == other.cod.apex
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash(self.dom.apex)

    def __repr__(self):
        return '<SpanMap {0}>'.format(self.name)


def whisker_inner(n, theta):
    """
    n∘θ: n∘m => n∘m' for θ: m => m', acting on the first (inner) coordinate.
    """
    dom, cod = span_compose(n, theta.dom), span_compose(n, theta.cod)
    return SpanMap(dom, cod, {(a, b): (theta(a), b) for a, b in dom.apex}, '{0}∘{1}'.format(n.name, theta.name))


def whisker_outer(theta, m):
    """
    θ∘m: n∘m => n'∘m for θ: n => n', acting on the second (outer) coordinate.
    """
    dom, cod = span_compose(theta.dom, m), span_compose(theta.cod, m)
    return SpanMap(dom, cod, {(a, b): (a, theta(b)) for a, b in dom.apex}, '{0}∘{1}'.format(theta.name, m.name))


def associator(p, q, r):
    """
    The canonical iso r∘(q∘p) => (r∘q)∘p, sending ((a, b), c) to (a, (b, c)).
    """
    dom = span_compose(r, span_compose(q, p))
    cod = span_compose(span_compose(r, q), p)
    return SpanMap(dom, cod, {((a, b), c): (a, (b, c)) for (a, b), c in dom.apex}, 'assoc')


def left_unitor(m):
    """
    1∘m => m.
    """
    dom = span_compose(type(m).identity(m.tgt), m)
    return SpanMap(dom, m, {(a, y): a for a, y in dom.apex}, 'unitor')


def right_unitor(m):
    """
    m∘1 => m.
    """
    dom = span_compose(m, type(m).identity(m.src))
    return SpanMap(dom, m, {(x, a): a for x, a in dom.apex}, 'unitor')
