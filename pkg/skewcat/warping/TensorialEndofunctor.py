# vim: ts=4:sw=4:expandtabs

from django.utils.translation import gettext_lazy as _

from skewcat.tensor import Morphism, TensorWord

from .WarpingException import WarpingException

IDENTITY = 'identity'
LEFT = 'left'
RIGHT = 'right'


class TensorialEndofunctor(object):
    """
    TX = A⊗X (kind LEFT), X⊗R (kind RIGHT) or X (kind IDENTITY), acting on morphisms by
    tensoring with the identity of the fixed word.
    """
    def __init__(self, kind, word=None):
        if kind not in (IDENTITY, LEFT, RIGHT):
            raise WarpingException(_('Unknown endofunctor kind {kind!r}.').format(kind=kind))
        self.kind = kind
        self.word = word if word is not None else TensorWord.unit()
        self._one = Morphism.identity(self.word)

    @classmethod
    def identity(cls):
        return cls(IDENTITY)

    @classmethod
    def left(cls, word):
        return cls(LEFT, TensorWord.of(word) if not isinstance(word, TensorWord) else word)

    @classmethod
    def right(cls, word):
        return cls(RIGHT, TensorWord.of(word) if not isinstance(word, TensorWord) else word)

    def obj(self, x):
        if self.kind == LEFT:
            return self.word + x
        if self.kind == RIGHT:
            return x + self.word
        return x

    def arr(self, f):
        if self.kind == LEFT:
            return self._one.tensor(f)
        if self.kind == RIGHT:
            return f.tensor(self._one)
        return f

    def __call__(self, x):
        return self.obj(x)

    def __eq__(self, other):
        return isinstance(other, TensorialEndofunctor) and (self.kind, self.word) == (other.kind, other.word)

    def __hash__(self):
        return hash((self.kind, self.word))

    def __repr__(self):
        if self.kind == LEFT:
            return '{0}⊗-'.format(self.word)
        if self.kind == RIGHT:
            return '-⊗{0}'.format(self.word)
        return 'Id'
