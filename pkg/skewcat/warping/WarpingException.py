# vim: ts=4:sw=4:expandtabs


class WarpingException(Exception):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.msg = msg
        self.report = report


class NotADuality(WarpingException):
    pass


class NotAnOpmonoidalMonad(WarpingException):
    pass


class KNotUnit(WarpingException):
    pass


class NotRightNormal(WarpingException):
    pass


class WarpingInvalid(WarpingException):
    pass
