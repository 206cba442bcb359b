# vim: ts=4:sw=4:expandtabs

from django.utils.translation import gettext_lazy as _

from .TensorException import ShapeError


class GenSpace(object):
    """
    A generator object of V: a named rational vector space with a chosen basis,
    optionally Z/2-graded by one parity bit per basis vector.
    """
    __slots__ = ('name', 'dim', 'grading')

    def __init__(self, name, dim, grading=None, allow_empty=False):
        if not isinstance(dim, int) or dim < (0 if allow_empty else 1):
            raise ShapeError(_('Space {name} must have positive dimension, got {dim}.').format(
                name=name, dim=dim
            ))

        if grading is not None:
            grading = tuple(int(bit) for bit in grading)
            if len(grading) != dim:
                msg = _('Space {name} has dimension {dim} but {count} parity bits.')
                raise ShapeError(msg.format(name=name, dim=dim, count=len(grading)))
            if any(bit not in (0, 1) for bit in grading):
                raise ShapeError(_('Parity bits of {name} must be 0 or 1.').format(name=name))

        object.__setattr__(self, 'name', str(name))
        object.__setattr__(self, 'dim', dim)
        object.__setattr__(self, 'grading', grading)

    def __setattr__(self, key, value):
        raise AttributeError('GenSpace is immutable.')

    @classmethod
    def anonymous(cls, dim, role='k'):
        """
        The space _<role><dim> for kernels and other derived objects. Zero dimension is
        allowed here. Derived spaces of one role and dimension are the same space.
        """
        return cls('_{0}{1}'.format(role, dim), dim, allow_empty=True)

    @property
    def is_graded(self):
        return self.grading is not None

    def parity(self, index):
        return self.grading[index] if self.grading is not None else 0

    def _key(self):
        return (self.name, self.dim, self.grading)

    def __eq__(self, other):
        return isinstance(other, GenSpace) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.grading is None:
            return 'GenSpace({0!r}, {1})'.format(self.name, self.dim)
        return 'GenSpace({0!r}, {1}, grading={2!r})'.format(self.name, self.dim, list(self.grading))
