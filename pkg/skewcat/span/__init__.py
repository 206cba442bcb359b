# vim: ts=4:sw=4:expandtabs

from .FinCategory import (
    ASSOCIATIVITY, CATEGORY_LAWS, IDENTITY_TYPED, LEFT_IDENTITY, RIGHT_IDENTITY, WELL_TYPED, FinCategory,
)
from .FinSet import FinSet
from .Span import Span, span_compose, span_product
from .SpanBicat import SpanBicat, tensor_left, tensor_right, unit_left, unit_right
from .SpanException import BoundaryMismatch, NotACategory, NotCategoryShaped, SpanException
from .SpanMap import SpanMap, associator, left_unitor, right_unitor, whisker_inner, whisker_outer
from .dictionary import (
    MONAD_ASSOC, MONAD_LAWS, MONAD_LEFT_UNIT, MONAD_RIGHT_UNIT, SpanMonad, category_to_monad_in_span,
    category_to_skew_monoidale, check_monad_in_span, skew_monoidale_to_category, tensor_span, unit_span,
)
