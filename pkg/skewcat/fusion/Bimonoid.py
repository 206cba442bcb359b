# vim: ts=4:sw=4:expandtabs

from skewcat.skew import AxiomReport
from skewcat.tensor import Morphism, TensorWord, braiding, braiding_inverse, compose, tensor

ASSOCIATIVITY = 'associativity'
LEFT_UNIT = 'left-unit'
RIGHT_UNIT = 'right-unit'
COASSOCIATIVITY = 'coassociativity'
LEFT_COUNIT = 'left-counit'
RIGHT_COUNIT = 'right-counit'
COMULTIPLICATIVE_PRODUCT = 'comultiplicative-product'
COUNITAL_PRODUCT = 'counital-product'
COMULTIPLICATIVE_UNIT = 'comultiplicative-unit'
COUNITAL_UNIT = 'counital-unit'

BIMONOID_LAWS = (
    ASSOCIATIVITY, LEFT_UNIT, RIGHT_UNIT,
    COASSOCIATIVITY, LEFT_COUNIT, RIGHT_COUNIT,
    COMULTIPLICATIVE_PRODUCT, COUNITAL_PRODUCT, COMULTIPLICATIVE_UNIT, COUNITAL_UNIT,
)

LAWS = {
    ASSOCIATIVITY: 'μ(μ⊗1) = μ(1⊗μ)',
    LEFT_UNIT: 'μ(η⊗1) = 1',
    RIGHT_UNIT: 'μ(1⊗η) = 1',
    COASSOCIATIVITY: '(δ⊗1)δ = (1⊗δ)δ',
    LEFT_COUNIT: '(ε⊗1)δ = 1',
    RIGHT_COUNIT: '(1⊗ε)δ = 1',
    COMULTIPLICATIVE_PRODUCT: 'δμ = (μ⊗μ)(1⊗b⊗1)(δ⊗δ)',
    COUNITAL_PRODUCT: 'εμ = ε⊗ε',
    COMULTIPLICATIVE_UNIT: 'δη = η⊗η',
    COUNITAL_UNIT: 'εη = 1',
}


class Bimonoid(object):
    """
    A monoid (mul, unit) and comonoid (comul, counit) on one space, compatible with respect
    to a chosen braiding b.
    """
    def __init__(self, space, mul, unit, comul, counit, name=''):
        self.space = space
        self.mul = mul
        self.unit = unit
        self.comul = comul
        self.counit = counit
        self.name = name

    @classmethod
    def from_tables(cls, space, products, coproducts, counit, unit, name=''):
        """
        Build from structure constants on the basis of `space`:
            products:   {(i, j): {k: scalar}}    e_i e_j
            coproducts: {i: {(a, b): scalar}}    δ(e_i)
            counit:     [scalar per basis vector]
            unit:       {k: scalar}               η(1)
        """
        n = space.dim
        A = TensorWord.of(space)
        AA = A + A
        I = TensorWord.unit()

        mul = Morphism.from_function(AA, A, lambda col: products.get(divmod(col, n), {}))
        comul = Morphism.from_function(
            A, AA, lambda col: {a * n + b: value for (a, b), value in coproducts.get(col, {}).items()}
        )
        eps = Morphism.from_rows(A, I, [list(counit)])
        eta = Morphism.from_function(I, A, lambda col: unit)
        return cls(space, mul, eta, comul, eps, name)

    @property
    def word(self):
        return TensorWord.of(self.space)

    def check(self, inverse_braiding=True):
        """
        Evaluate the ten bimonoid laws. The compatibility law uses c⁻¹ when
        inverse_braiding is set and c otherwise.
        """
        A = self.word
        one = Morphism.identity(A)
        mul, unit, comul, counit = self.mul, self.unit, self.comul, self.counit
        b = braiding_inverse(A, A) if inverse_braiding else braiding(A, A)

        report = AxiomReport(self.name)
        laws = [
            (ASSOCIATIVITY, compose(mul, tensor(mul, one)), compose(mul, tensor(one, mul))),
            (LEFT_UNIT, compose(mul, tensor(unit, one)), one),
            (RIGHT_UNIT, compose(mul, tensor(one, unit)), one),
            (COASSOCIATIVITY, compose(tensor(comul, one), comul), compose(tensor(one, comul), comul)),
            (LEFT_COUNIT, compose(tensor(counit, one), comul), one),
            (RIGHT_COUNIT, compose(tensor(one, counit), comul), one),
            (COMULTIPLICATIVE_PRODUCT, compose(comul, mul),
             compose(tensor(mul, mul), tensor(one, b, one), tensor(comul, comul))),
            (COUNITAL_PRODUCT, compose(counit, mul), tensor(counit, counit)),
            (COMULTIPLICATIVE_UNIT, compose(comul, unit), tensor(unit, unit)),
            (COUNITAL_UNIT, compose(counit, unit), Morphism.identity(TensorWord.unit())),
        ]
        for name, lhs, rhs in laws:
            report.check_equal(name, LAWS[name], lhs, rhs)
        return report

    def is_valid(self, inverse_braiding=True):
        return self.check(inverse_braiding).passed

    def replace(self, **changes):
        fields = dict(space=self.space, mul=self.mul, unit=self.unit, comul=self.comul,
                      counit=self.counit, name=self.name)
        fields.update(changes)
        return Bimonoid(**fields)

    def maps(self):
        return {'mul': self.mul, 'unit': self.unit, 'comul': self.comul, 'counit': self.counit}

    def __eq__(self, other):
        return isinstance(other, Bimonoid) and self.space == other.space and self.maps() == other.maps()

    def __hash__(self):
        return hash(self.space)

    def __repr__(self):
        return '<Bimonoid {0} on {1}>'.format(self.name, self.space)
