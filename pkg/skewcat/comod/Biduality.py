# vim: ts=4:sw=4:expandtabs

from skewcat.skew import AxiomReport
from skewcat.tensor import Morphism, braiding, tensor

from .Comodule import Comodule, cotensor, tensor_comodules
from .ComoduleMap import find_isomorphism
from .FinCoalgebra import FinCoalgebra

SNAKE_LEFT = 'snake-left'
SNAKE_RIGHT = 'snake-right'

SNAKE_LAWS = (SNAKE_LEFT, SNAKE_RIGHT)

LAWS = {
    SNAKE_LEFT: '(e⊗1)∘(1⊗n) ≅ 1_C',
    SNAKE_RIGHT: '(1⊗e)∘(n⊗1) ≅ 1_C°',
}


def legwise_iso_check(report, axiom, law, lhs, rhs, isos):
    """
    Record whether lhs[k] ≅ rhs[k] for every k, with the first leg that is not isomorphic as
    the witness. The isos found are kept in `isos`, a single map when there is one leg.
    """
    found = []

    def isomorphic(m, n):
        iso = find_isomorphism(m, n)
        if iso is not None:
            found.append(iso)
        return iso is not None

    result = report.check(axiom, law, [(k,) for k in range(len(lhs))], lambda k: (lhs[k], rhs[k]), isomorphic)
    if result.passed:
        isos[axiom] = found[0] if len(found) == 1 else tuple(found)
    return result


def iso_check(report, axiom, law, m, n, isos):
    return legwise_iso_check(report, axiom, law, [m], [n], isos)


class Biduality(object):
    """
    The right bidual C° of a coalgebra C, with unit n: I -> C°⊗C and counit e: C⊗C° -> I.
    Both are C itself with its two coactions read on one side.
    """
    def __init__(self, C, C_op, n, e):
        self.C = C
        self.C_op = C_op
        self.n = n
        self.e = e
        self.isos = {}

    @classmethod
    def of(cls, C):
        I = FinCoalgebra.unit()
        if C.is_unit:
            unit = Comodule.identity(I)
            return cls(C, C, unit, unit)

        W = C.word
        one = Morphism.identity(W)
        twice = tensor(C.comul, one) @ C.comul
        C_op = C.co_opposite()
        n = Comodule(I, C_op * C, W, Morphism.identity(W),
                     tensor(braiding(W, W), one) @ twice, name='n')
        e = Comodule(C * C_op, I, W, tensor(one, braiding(W, W)) @ twice,
                     Morphism.identity(W), name='e')
        return cls(C, C_op, n.validate(), e.validate())

    def check(self):
        C, C_op = self.C, self.C_op
        one_c, one_op = Comodule.identity(C), Comodule.identity(C_op)

        report = AxiomReport('{0}°'.format(C.name))
        iso_check(report, SNAKE_LEFT, LAWS[SNAKE_LEFT],
                  cotensor(tensor_comodules(one_c, self.n), tensor_comodules(self.e, one_c)),
                  one_c, self.isos)
        iso_check(report, SNAKE_RIGHT, LAWS[SNAKE_RIGHT],
                  cotensor(tensor_comodules(self.n, one_op), tensor_comodules(one_op, self.e)),
                  one_op, self.isos)
        return report

    @property
    def enveloping(self):
        """
        C^e = C°⊗C.
        """
        return self.C_op * self.C

    def __repr__(self):
        return '<Biduality {0} ⊣ {1}>'.format(self.C.name, self.C_op.name)
