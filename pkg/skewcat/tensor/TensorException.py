# vim: ts=4:sw=4:expandtabs


class TensorException(Exception):
    def __init__(self, msg):
        super().__init__(msg)
        self.msg = msg


class WordMismatch(TensorException):
    """
    Raised when two morphisms are composed across different tensor words.
    """


class ShapeError(TensorException):
    """
    Raised when a matrix, grading or space does not fit the words it claims to live between.
    """
