# vim: ts=4:sw=4:expandtabs


class SkewException(Exception):
    def __init__(self, msg):
        super().__init__(msg)
        self.msg = msg


class ShapeError(SkewException):
    """
    A constraint component does not have the source or target its chirality prescribes.
    """


class UnsupportedCarrier(SkewException):
    """
    The requested duality or construction is not available on this carrier.
    """


class NotInvertible(SkewException):
    """
    A constraint component needed in inverted form has no inverse.
    """
