# vim: ts=4:sw=4:expandtabs

from django.utils.translation import gettext_lazy as _

from skewcat.skew import AxiomReport

from .FinSet import FinSet
from .SpanException import NotACategory

WELL_TYPED = 'well-typed'
IDENTITY_TYPED = 'identity-typed'
LEFT_IDENTITY = 'left-identity'
RIGHT_IDENTITY = 'right-identity'
ASSOCIATIVITY = 'associativity'

CATEGORY_LAWS = (WELL_TYPED, IDENTITY_TYPED, LEFT_IDENTITY, RIGHT_IDENTITY, ASSOCIATIVITY)

LAWS = {
    WELL_TYPED: 'f;g is defined exactly when t(f) = s(g), from s(f) to t(g)',
    IDENTITY_TYPED: 's(id x) = t(id x) = x',
    LEFT_IDENTITY: 'id(s f);f = f',
    RIGHT_IDENTITY: 'f;id(t f) = f',
    ASSOCIATIVITY: '(f;g);h = f;(g;h)',
}


class FinCategory(object):
    """
    A finite category. `comp[(f, g)]` is the composite f;g (first f, then g), defined on
    pairs with t(f) = s(g).
    """
    def __init__(self, objects, morphisms, source, target, identity, comp, name=''):
        self.objects = objects if isinstance(objects, FinSet) else FinSet(objects)
        self.morphisms = morphisms if isinstance(morphisms, FinSet) else FinSet(morphisms)
        self.source = dict(source)
        self.target = dict(target)
        self.identity = dict(identity)
        self.comp = dict(comp)
        self.name = name

    @classmethod
    def from_table(cls, objects, morphisms, source, target, identity, table, name=''):
        """
        Build from a composition table of [f, g, f;g] triples.
        """
        return cls(objects, morphisms, source, target, identity,
                   {(f, g): h for f, g, h in table}, name)

    def composable_pairs(self):
        return [(f, g) for f in self.morphisms for g in self.morphisms if self.target[f] == self.source[g]]

    def composable_triples(self):
        return [
            (f, g, h) for f, g in self.composable_pairs()
            for h in self.morphisms if self.target[g] == self.source[h]
        ]

    def compose(self, f, g):
        return self.comp[(f, g)]

    def check(self):
        s, t, ident, comp = self.source, self.target, self.identity, self.comp
        pairs = set(self.composable_pairs())
        report = AxiomReport(self.name)

        def well_typed(f, g):
            if (f, g) not in pairs:
                return (f, g) in comp, False
            h = comp.get((f, g))
            return (h is not None and s.get(h) == s[f] and t.get(h) == t[g]), True

        report.check(WELL_TYPED, LAWS[WELL_TYPED], [(f, g) for f in self.morphisms for g in self.morphisms],
                     well_typed)
        report.check(IDENTITY_TYPED, LAWS[IDENTITY_TYPED], [(x,) for x in self.objects], lambda x: (
            (s.get(ident.get(x)), t.get(ident.get(x))), (x, x),
        ))
        if not report.passed:
            return report

        report.check(LEFT_IDENTITY, LAWS[LEFT_IDENTITY], [(f,) for f in self.morphisms],
                     lambda f: (comp[(ident[s[f]], f)], f))
        report.check(RIGHT_IDENTITY, LAWS[RIGHT_IDENTITY], [(f,) for f in self.morphisms],
                     lambda f: (comp[(f, ident[t[f]])], f))
        report.check(ASSOCIATIVITY, LAWS[ASSOCIATIVITY], self.composable_triples(),
                     lambda f, g, h: (comp[(comp[(f, g)], h)], comp[(f, comp[(g, h)])]))
        return report

    def validate(self):
        report = self.check()
        if not report.passed:
            msg = _('{name} is not a category: {failing} fails.')
            raise NotACategory(msg.format(name=self.name, failing=', '.join(sorted(report.failing()))), report)
        return self

    def mutate(self, f, g, h, name=None):
        """
        The same data with f;g redefined as h.
        """
        comp = dict(self.comp)
        comp[(f, g)] = h
        return FinCategory(self.objects, self.morphisms, self.source, self.target, self.identity, comp,
                           name or '{0}[{1};{2}:={3}]'.format(self.name, f, g, h))

    def with_identity(self, x, f, name=None):
        identity = dict(self.identity)
        identity[x] = f
        return FinCategory(self.objects, self.morphisms, self.source, self.target, identity, self.comp,
                           name or '{0}[id {1}:={2}]'.format(self.name, x, f))

    def table(self):
        return [[f, g, self.comp[(f, g)]] for f, g in self.composable_pairs() if (f, g) in self.comp]

    def to_json(self):
        return {
            'objects': list(self.objects),
            'morphisms': list(self.morphisms),
            'source': dict(self.source),
            'target': dict(self.target),
            'id': dict(self.identity),
            'comp': self.table(),
        }

    def __eq__(self, other):
        return isinstance(other, FinCategory) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(self.morphisms)

    def __repr__(self):
        return '<FinCategory {0}: {1} objects, {2} morphisms>'.format(
            self.name, len(self.objects), len(self.morphisms))
