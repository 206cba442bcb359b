# vim: ts=4:sw=4:expandtabs
"""
Small categories read three ways: by their own laws, as monads on the object set in Span,
and as left skew monoidales (C, p, j) in Span with p = C×C <-(s,t)- A -t-> C.
"""

import logging
from collections import namedtuple

from django.utils.translation import gettext_lazy as _

from skewcat.skew import AxiomReport, SkewStructure

from .FinCategory import ASSOCIATIVITY, LEFT_IDENTITY, RIGHT_IDENTITY, FinCategory
from .FinSet import FinSet
from .Span import Span, span_compose
from .SpanBicat import SpanBicat, tensor_left, tensor_right, unit_left, unit_right
from .SpanException import NotACategory, NotCategoryShaped, SpanException
from .SpanMap import SpanMap, associator, left_unitor, right_unitor, whisker_inner, whisker_outer

logger = logging.getLogger(__name__)

MONAD_ASSOC = 'monad-assoc'
MONAD_LEFT_UNIT = 'monad-left-unit'
MONAD_RIGHT_UNIT = 'monad-right-unit'

MONAD_LAWS = (MONAD_ASSOC, MONAD_LEFT_UNIT, MONAD_RIGHT_UNIT)

# category law <-> monad-in-Span law <-> skew monoidale axiom
ASSOCIATIVITY_LAWS = (ASSOCIATIVITY, MONAD_ASSOC)
IDENTITY_LAWS = (LEFT_IDENTITY, RIGHT_IDENTITY, MONAD_LEFT_UNIT, MONAD_RIGHT_UNIT)

SpanMonad = namedtuple('SpanMonad', 'span mul unit')


def _require_category(c, validate):
    if validate:
        c.validate()


def tensor_span(c):
    """
    C×C <-(s,t)- A -t-> C.
    """
    C = c.objects
    return Span(C * C, C, c.morphisms,
                {f: (c.source[f], c.target[f]) for f in c.morphisms},
                {f: c.target[f] for f in c.morphisms}, 'p')


def unit_span(c):
    """
    1 <- C -id-> C, the span picking out the identities.

    This unit is a reconstruction: it is the choice under which ρ(x) = (x, id x) lands in
    p ∘ (j ⊗ 1), and the five axioms together with the category roundtrip confirm it.
    """
    C = c.objects
    return Span(FinSet.point(), C, C, {x: () for x in C}, {x: x for x in C}, 'j')


def category_to_skew_monoidale(c, validate=True):
    """
    α(f, g) = (g, f;g), λ(x, f) = t(f) and ρ(x) = (x, id x).
    """
    _require_category(c, validate)
    p, j = tensor_span(c), unit_span(c)
    try:
        source = tensor_left(p)
        alpha = SpanMap(source, tensor_right(p), {(f, g): (g, c.comp[(f, g)]) for f, g in source.apex}, 'α')
        lam_dom = unit_left(p, j)
        lam = SpanMap(lam_dom, Span.identity(c.objects), {(x, f): c.target[f] for x, f in lam_dom.apex}, 'λ')
        rho = SpanMap(Span.identity(c.objects), unit_right(p, j),
                      {x: (x, c.identity[x]) for x in c.objects}, 'ρ')
    except (KeyError, SpanException) as e:
        raise NotACategory(_('{name} does not induce span 2-cells: {error}').format(name=c.name, error=e))

    logger.debug('%s: |p(p×1)| = %d, |p(1×p)| = %d', c.name, len(alpha.dom.apex), len(alpha.cod.apex))
    return SkewStructure(SpanBicat(), p, j, alpha, lam, rho, name='span({0})'.format(c.name))


def skew_monoidale_to_category(s, validate=True):
    """
    Read composition from α and identities from ρ. The tensor span must have left leg
    (s, t) and right leg t, and j must select each object once.
    """
    if validate:
        report = s.check()
        if not report.passed:
            msg = _('{name} fails {failing}; it is not a category.')
            raise NotCategoryShaped(msg.format(name=s.name, failing=', '.join(sorted(report.failing()))), report)

    p, j = s.tensor, s.unit
    C = p.tgt
    if p.src != C * C or any(p.left[a][1] != p.right[a] for a in p.apex):
        raise NotCategoryShaped(_('{name}: the tensor span is not of the form (s, t), t.').format(name=s.name))
    if sorted(map(repr, j.right.values())) != sorted(map(repr, C)) or len(j.apex) != len(C):
        raise NotCategoryShaped(_('{name}: the unit span does not select each object once.').format(name=s.name))

    comp = {}
    for a, b in s.assoc.dom.apex:
        inner, outer = s.assoc((a, b))
        if inner != b:
            raise NotCategoryShaped(_('{name}: α does not keep the second factor.').format(name=s.name))
        comp[(a, b)] = outer

    return FinCategory(
        C, p.apex,
        {a: p.left[a][0] for a in p.apex},
        {a: p.right[a] for a in p.apex},
        {x: s.right_unit(x)[1] for x in C},
        comp, name=s.name,
    )


def category_to_monad_in_span(c, validate=True):
    """
    C <-s- A -t-> C with μ(f, g) = f;g on composable pairs and η(x) = id x.
    """
    _require_category(c, validate)
    C = c.objects
    A = Span(C, C, c.morphisms, c.source, c.target, 'A')
    AA = span_compose(A, A)
    try:
        mul = SpanMap(AA, A, {(f, g): c.comp[(f, g)] for f, g in AA.apex}, 'μ')
        unit = SpanMap(Span.identity(C), A, {x: c.identity[x] for x in C}, 'η')
    except (KeyError, SpanException) as e:
        raise NotACategory(_('{name} does not induce a monad: {error}').format(name=c.name, error=e))
    return SpanMonad(A, mul, unit)


def check_monad_in_span(monad):
    """
    Associativity and both unit laws, with the canonical isos of Span inserted.
    """
    A, mul, unit = monad
    report = AxiomReport(A.name)

    # μ(μ∘A) and μ(A∘μ) on A∘(A∘A), re-bracketed by the associator
    outer_first = whisker_inner(A, mul).then(mul)
    inner_first = associator(A, A, A).then(whisker_outer(mul, A)).then(mul)
    report.check(MONAD_ASSOC, 'μ(μ∘1) = μ(1∘μ)', [(x,) for x in outer_first.dom.apex],
                 lambda x: (outer_first(x), inner_first(x)))

    left = whisker_outer(unit, A).then(mul)
    right = whisker_inner(A, unit).then(mul)
    report.check(MONAD_LEFT_UNIT, 'μ(η∘1) = unitor', [(x,) for x in left.dom.apex],
                 lambda x: (left(x), left_unitor(A)(x)))
    report.check(MONAD_RIGHT_UNIT, 'μ(1∘η) = unitor', [(x,) for x in right.dom.apex],
                 lambda x: (right(x), right_unitor(A)(x)))
    return report
