# vim: ts=4:sw=4:expandtabs

from functools import reduce

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured
from django.utils.module_loading import import_string
from django.utils.translation import gettext_lazy as _

from .AbstractBraiding import AbstractBraiding
from .GenSpace import GenSpace
from .KoszulBraiding import KoszulBraiding
from .Morphism import Morphism
from .TensorException import ShapeError, TensorException, WordMismatch
from .TensorWord import TensorWord
from .scalars import ONE, ZERO, format_scalar, parse_scalar, to_scalar


def get_braiding():
    """
    Validate settings.SKEWCAT_BRAIDING_CLASS and, if valid, return an instance thereof.
    """
    try:
        braiding_class = import_string(settings.SKEWCAT_BRAIDING_CLASS)
    except AttributeError:
        msg = _('settings.SKEWCAT_BRAIDING_CLASS must be declared and contain the dotted '
                'path to a class which implements skewcat.tensor.AbstractBraiding.')
        raise ImproperlyConfigured(msg)
    except (ModuleNotFoundError, ImportError):
        msg = _("Couldn't load settings.SKEWCAT_BRAIDING_CLASS. You gave {path}. Check the PYTHONPATH?")
        raise ImproperlyConfigured(msg.format(path=settings.SKEWCAT_BRAIDING_CLASS))

    if not isinstance(braiding_class, type) or not issubclass(braiding_class, AbstractBraiding):
        msg = _('settings.SKEWCAT_BRAIDING_CLASS must refer '
                'to a subclass of AbstractBraiding.')
        raise ImproperlyConfigured(msg)

    return braiding_class()


def word(*factors):
    return TensorWord(factors)


def identity(*factors):
    return Morphism.identity(TensorWord(factors))


def braiding(left, right):
    """
    c_{X,Y}: X⊗Y -> Y⊗X under the configured braiding.
    """
    return get_braiding().braid(word(left), word(right))


def braiding_inverse(left, right):
    """
    c⁻¹_{X,Y}: Y⊗X -> X⊗Y under the configured braiding.
    """
    return get_braiding().unbraid(word(left), word(right))


def compose(*morphisms):
    """
    compose(h, g, f) = h ∘ g ∘ f.
    """
    return reduce(lambda g, f: g.compose(f), morphisms)


def tensor(*morphisms):
    """
    tensor(f, g, h) = f ⊗ g ⊗ h; tensor() is the identity of the unit word.
    """
    if not morphisms:
        return Morphism.identity(TensorWord.unit())
    return reduce(lambda f, g: f.tensor(g), morphisms)


def kernel(f):
    return f.kernel()


def equalizer(f, g):
    """
    The equalizer of a parallel pair, computed as the kernel of f - g.
    """
    return (f - g).kernel()


def rank(f):
    return f.rank()


def is_invertible(f):
    """
    Return (True, inverse) or (False, None).
    """
    inverse = f.inverse()
    return inverse is not None, inverse


def left_inverse(f):
    return f.left_inverse()


def stack(*morphisms):
    """
    Vertical concatenation of maps sharing a domain, landing in an anonymous space. The
    kernel of the stack is the joint kernel.
    """
    dom = morphisms[0].dom
    rows, offset = {}, 0
    for f in morphisms:
        if f.dom != dom:
            raise WordMismatch(_('Stacked morphisms must share a domain.'))
        for i, row in f.entries().items():
            rows[offset + i] = row
        offset += f.cod.dim
    return Morphism.from_entries(dom, word(GenSpace.anonymous(offset, 'stack')), rows)
