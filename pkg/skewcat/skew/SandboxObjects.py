# vim: ts=4:sw=4:expandtabs

from itertools import product

from django.utils.translation import gettext_lazy as _

from skewcat.tensor import GenSpace, TensorWord

from .SkewException import ShapeError


class SandboxObjects(object):
    """
    The finite list of test objects on which natural families are instantiated. Pairs,
    triples and quadruples are formed on demand.
    """
    def __init__(self, generators):
        generators = tuple(generators)
        if not generators:
            raise ShapeError(_('A sandbox needs at least one test object.'))
        self.generators = generators

    @classmethod
    def of_words(cls, *words):
        return cls(TensorWord(w) if not isinstance(w, TensorWord) else w for w in words)

    @classmethod
    def default(cls):
        """
        The unit, a line and a plane.
        """
        return cls.of_words(TensorWord.unit(), TensorWord.of(GenSpace('U', 1)), TensorWord.of(GenSpace('P', 2)))

    @classmethod
    def small(cls):
        return cls.of_words(TensorWord.unit(), TensorWord.of(GenSpace('P', 2)))

    @classmethod
    def graded(cls):
        return cls.of_words(
            TensorWord.unit(),
            TensorWord.of(GenSpace('P', 2)),
            TensorWord.of(GenSpace('S', 2, grading=[0, 1])),
        )

    def tuples(self, arity):
        return product(self.generators, repeat=arity)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return 'SandboxObjects({0})'.format(', '.join(repr(g) for g in self.generators))
