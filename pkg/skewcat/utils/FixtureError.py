# vim: ts=4:sw=4:expandtabs


class FixtureError(Exception):
    """
    A fixture file that does not parse against the schema. `path` names the offending JSON
    location, e.g. $.maps.mul.matrix[1].
    """
    def __init__(self, msg, path='$'):
        super().__init__('{0}: {1}'.format(path, msg))
        self.msg = msg
        self.path = path
