# vim: ts=4:sw=4:expandtabs


class FusionException(Exception):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.msg = msg
        self.report = report


class NotABimonoid(FusionException):
    pass


class NotATricocycloid(FusionException):
    pass


class MissingAugmentation(FusionException):
    pass
