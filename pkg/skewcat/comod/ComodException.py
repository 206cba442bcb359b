# vim: ts=4:sw=4:expandtabs


class ComodException(Exception):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.msg = msg
        self.report = report


class BoundaryMismatch(ComodException):
    """
    Comodules or comodule maps whose coalgebras do not line up.
    """


class NotAComonoid(ComodException):
    pass


class NotAComodule(ComodException):
    pass


class NotAComoduleMap(ComodException):
    pass


class NotAComonoidMorphism(ComodException):
    pass


class QuantumInvalid(ComodException):
    pass


class SkewInvalid(ComodException):
    pass
