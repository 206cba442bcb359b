# vim: ts=4:sw=4:expandtabs

from itertools import product

from django.utils.translation import gettext_lazy as _

from skewcat.skew import (
    LEFT, AbstractCarrier, AxiomReport, Classification, LAWS, LEFT_UNIT, PENTAGON, RIGHT_UNIT,
    TRIANGLE, UNIT_UNIT, UnsupportedCarrier,
)

from .FinSet import FinSet
from .Span import Span


def tensor_left(p):
    """
    p∘(p×1) in normal form: pairs (a, b), a the inner node, with r(a) = l(b)[0].
    """
    C = p.tgt
    apex = FinSet((a, b) for a in p.apex for b in p.apex if p.right[a] == p.left[b][0])
    return Span(
        FinSet(product(C, repeat=3)), C, apex,
        {(a, b): (p.left[a][0], p.left[a][1], p.left[b][1]) for a, b in apex},
        {(a, b): p.right[b] for a, b in apex},
        'p(p×1)',
    )


def tensor_right(p):
    """
    p∘(1×p) in normal form: pairs (b, a), b the inner node, with r(b) = l(a)[1].
    """
    C = p.tgt
    apex = FinSet((b, a) for a in p.apex for b in p.apex if p.right[b] == p.left[a][1])
    return Span(
        FinSet(product(C, repeat=3)), C, apex,
        {(b, a): (p.left[a][0], p.left[b][0], p.left[b][1]) for b, a in apex},
        {(b, a): p.right[a] for b, a in apex},
        'p(1×p)',
    )


def unit_left(p, j):
    """
    p∘(j×1) in normal form: pairs (u, a) with j(u) = l(a)[0].
    """
    apex = FinSet((u, a) for u in j.apex for a in p.apex if j.right[u] == p.left[a][0])
    return Span(p.tgt, p.tgt, apex,
                {(u, a): p.left[a][1] for u, a in apex},
                {(u, a): p.right[a] for u, a in apex}, 'p(j×1)')


def unit_right(p, j):
    """
    p∘(1×j) in normal form: pairs (u, a) with j(u) = l(a)[1].
    """
    apex = FinSet((u, a) for u in j.apex for a in p.apex if j.right[u] == p.left[a][1])
    return Span(p.tgt, p.tgt, apex,
                {(u, a): p.left[a][0] for u, a in apex},
                {(u, a): p.right[a] for u, a in apex}, 'p(1×j)')


class SpanBicat(AbstractCarrier):
    """
    Left skew monoidales (C, p, j, α, λ, ρ) in Span with the cartesian product. Composite
    1-cells are kept in the normal forms above, so the ambient associators and unitors are
    re-bracketings and the axioms are read on flattened apex elements.
    """
    name = 'span'

    def _require_left(self, structure):
        if structure.chirality != LEFT:
            raise UnsupportedCarrier(_('Span monoidales are checked in left chirality only.'))

    def check(self, structure, objs=None):
        self._require_left(structure)
        p, j = structure.tensor, structure.unit
        alpha, lam, rho = structure.assoc, structure.left_unit, structure.right_unit
        left, right = p.left, p.right

        def pentagon(a, b, c):
            c1, b1 = alpha((b, c))
            b2, a2 = alpha((a, b1))
            b3, a3 = alpha((a, b))
            c4, a4 = alpha((a3, c))
            c5, b5 = alpha((b3, c4))
            return (c1, b2, a2), (c5, b5, a4)

        def triangle(a):
            _u, e = rho(left[a][0])
            _inner, outer = alpha((e, a))
            return outer, a

        def left_unit(u, a, b):
            inner, _outer = alpha((a, b))
            return inner, b

        def right_unit(a):
            u, e = rho(right[a])
            inner, outer = alpha((a, e))
            u2, e2 = rho(left[a][1])
            return (u, inner, outer), (u2, e2, a)

        def unit_unit(u):
            u2, _e = rho(j.right[u])
            return u2, u

        triples = [
            (a, b, c) for a, b in alpha.dom.apex
            for c in p.apex if right[b] == left[c][0]
        ]
        unit_triples = [
            (u, a, b) for u, a in lam.dom.apex
            for b in p.apex if right[a] == left[b][0]
        ]

        report = AxiomReport(structure.name)
        report.check(PENTAGON, LAWS[PENTAGON], triples, pentagon)
        report.check(TRIANGLE, LAWS[TRIANGLE], [(a,) for a in p.apex], triangle)
        report.check(LEFT_UNIT, LAWS[LEFT_UNIT], unit_triples, left_unit)
        report.check(RIGHT_UNIT, LAWS[RIGHT_UNIT], [(a,) for a in p.apex], right_unit)
        report.check(UNIT_UNIT, LAWS[UNIT_UNIT], [(u,) for u in j.apex], unit_unit)
        return report

    def classify(self, structure, objs=None):
        self._require_left(structure)
        return Classification(
            hopf=structure.assoc.is_bijective(),
            left_normal=structure.left_unit.is_bijective(),
            right_normal=structure.right_unit.is_bijective(),
        )

    def dualize(self, structure, mode):
        raise UnsupportedCarrier(_('The {mode} dual is not available for Span monoidales.').format(mode=mode))

    def inverse(self, structure):
        raise UnsupportedCarrier(_('Inverse constraints are not available for Span monoidales.'))
