# vim: ts=4:sw=4:expandtabs


class SpanException(Exception):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.msg = msg
        self.report = report


class BoundaryMismatch(SpanException):
    """
    Spans or 2-cells that do not share the boundary an operation needs.
    """


class NotACategory(SpanException):
    pass


class NotCategoryShaped(SpanException):
    pass
