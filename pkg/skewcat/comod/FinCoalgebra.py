# vim: ts=4:sw=4:expandtabs

from django.utils.translation import gettext_lazy as _

from skewcat.fusion.Bimonoid import COASSOCIATIVITY, LAWS, LEFT_COUNIT, RIGHT_COUNIT
from skewcat.skew import AxiomReport
from skewcat.tensor import GenSpace, Morphism, TensorWord, braiding, compose, tensor

from .ComodException import NotAComonoid


class FinCoalgebra(object):
    """
    A comonoid (word, comul, counit) in finite dimensional rational vector spaces. The
    unit coalgebra I lives on the empty word, so I⊗C and C⊗I are C on the nose.
    """
    def __init__(self, word, comul, counit, name=''):
        self.word = word if isinstance(word, TensorWord) else TensorWord.of(word)
        self.comul = comul
        self.counit = counit
        self.name = name or repr(self.word)

    @classmethod
    def unit(cls):
        I = TensorWord.unit()
        return cls(I, Morphism.identity(I), Morphism.identity(I), 'I')

    @classmethod
    def grouplike(cls, name, dim):
        """
        k{X}: δ(x) = x⊗x and ε(x) = 1 on a basis of size dim.
        """
        space = GenSpace(name, dim)
        C = TensorWord.of(space)
        comul = Morphism.from_function(C, C + C, lambda i: {i * dim + i: 1})
        counit = Morphism.from_rows(C, TensorWord.unit(), [[1] * dim])
        return cls(C, comul, counit, name)

    @classmethod
    def from_tables(cls, space, coproducts, counit, name=''):
        """
        coproducts: {i: {(a, b): scalar}}, counit: [scalar per basis vector].
        """
        n = space.dim
        C = TensorWord.of(space)
        comul = Morphism.from_function(
            C, C + C, lambda i: {a * n + b: v for (a, b), v in coproducts.get(i, {}).items()}
        )
        return cls(C, comul, Morphism.from_rows(C, TensorWord.unit(), [list(counit)]), name or space.name)

    @property
    def dim(self):
        return self.word.dim

    @property
    def is_unit(self):
        return self.word.is_unit

    def tensor(self, other):
        """
        C⊗D with δ = (1⊗c⊗1)(δ⊗δ) and ε = ε⊗ε.
        """
        if self.is_unit:
            return other
        if other.is_unit:
            return self
        C, D = self.word, other.word
        comul = compose(
            tensor(Morphism.identity(C), braiding(C, D), Morphism.identity(D)),
            tensor(self.comul, other.comul),
        )
        return FinCoalgebra(C + D, comul, tensor(self.counit, other.counit),
                            '{0}⊗{1}'.format(self.name, other.name))

    __mul__ = tensor

    def co_opposite(self):
        """
        The same space with comultiplication c∘δ.
        """
        if self.is_unit:
            return self
        return FinCoalgebra(self.word, braiding(self.word, self.word) @ self.comul, self.counit,
                            '{0}°'.format(self.name))

    def is_cocommutative(self):
        return braiding(self.word, self.word) @ self.comul == self.comul

    def check(self):
        one = Morphism.identity(self.word)
        comul, counit = self.comul, self.counit

        report = AxiomReport(self.name)
        report.check_equal(COASSOCIATIVITY, LAWS[COASSOCIATIVITY],
                           tensor(comul, one) @ comul, tensor(one, comul) @ comul)
        report.check_equal(LEFT_COUNIT, LAWS[LEFT_COUNIT], tensor(counit, one) @ comul, one)
        report.check_equal(RIGHT_COUNIT, LAWS[RIGHT_COUNIT], tensor(one, counit) @ comul, one)
        return report

    def validate(self):
        report = self.check()
        if not report.passed:
            msg = _('{name} is not a coalgebra: {failing} fails.')
            raise NotAComonoid(msg.format(name=self.name, failing=', '.join(sorted(report.failing()))), report)
        return self

    def is_comonoid_map(self, f, other):
        """
        Whether f: self -> other preserves comultiplication and counit.
        """
        return (
            other.comul @ f == tensor(f, f) @ self.comul
            and other.counit @ f == self.counit
        )

    def __eq__(self, other):
        return (
            isinstance(other, FinCoalgebra)
            and self.word == other.word and self.comul == other.comul and self.counit == other.counit
        )

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return '<FinCoalgebra {0}>'.format(self.name)
