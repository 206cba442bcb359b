# vim: ts=4:sw=4:expandtabs

from skewcat.skew import AxiomReport, SandboxObjects
from skewcat.tensor import Morphism

OPMONOIDAL_ASSOC = 'opmonoidal-assoc'
OPMONOIDAL_LEFT_UNIT = 'opmonoidal-left-unit'
OPMONOIDAL_RIGHT_UNIT = 'opmonoidal-right-unit'

OPMONOIDAL_AXIOMS = (OPMONOIDAL_ASSOC, OPMONOIDAL_LEFT_UNIT, OPMONOIDAL_RIGHT_UNIT)

LAWS = {
    OPMONOIDAL_ASSOC: 'α(FA,FB,FC)(ψ(A,B)⊗1)ψ(A⊗B,C) = (1⊗ψ(B,C))ψ(A,B⊗C)F(α(A,B,C))',
    OPMONOIDAL_LEFT_UNIT: 'λ(FB)(ψ0⊗1)ψ(I,B) = F(λ(B))',
    OPMONOIDAL_RIGHT_UNIT: '(1⊗ψ0)ψ(A,I)F(ρ(A)) = ρ(FA)',
}


class OpmonoidalFunctorWitness(object):
    """
    An endofunctor F with ψ(A,B): F(A⊗A') -> FA⊗FA' and ψ0: F(J) -> J', opmonoidal from the
    left skew structure `source` to the left skew structure `target`. Neither structure
    needs invertible constraints.
    """
    def __init__(self, functor, psi, psi0, source, target):
        self.functor = functor
        self.psi = psi
        self.psi0 = psi0
        self.source = source
        self.target = target

    def check(self, objs=None):
        objs = objs or SandboxObjects.default()
        F, psi, psi0 = self.functor, self.psi, self.psi0
        s, t = self.source, self.target
        s_obj = s.tensor.obj
        t_arr = t.tensor.arr
        one = Morphism.identity

        def assoc(a, b, c):
            lhs = t.assoc(F(a), F(b), F(c)) @ t_arr(psi(a, b), one(F(c))) @ psi(s_obj(a, b), c)
            rhs = t_arr(one(F(a)), psi(b, c)) @ psi(a, s_obj(b, c)) @ F.arr(s.assoc(a, b, c))
            return lhs, rhs

        def left_unit(b):
            lhs = t.left_unit(F(b)) @ t_arr(psi0, one(F(b))) @ psi(s.unit, b)
            return lhs, F.arr(s.left_unit(b))

        def right_unit(a):
            lhs = t_arr(one(F(a)), psi0) @ psi(a, s.unit) @ F.arr(s.right_unit(a))
            return lhs, t.right_unit(F(a))

        report = AxiomReport('({0}, ψ, ψ0)'.format(F))
        report.check(OPMONOIDAL_ASSOC, LAWS[OPMONOIDAL_ASSOC], objs.tuples(3), assoc)
        report.check(OPMONOIDAL_LEFT_UNIT, LAWS[OPMONOIDAL_LEFT_UNIT], objs.tuples(1), left_unit)
        report.check(OPMONOIDAL_RIGHT_UNIT, LAWS[OPMONOIDAL_RIGHT_UNIT], objs.tuples(1), right_unit)
        return report
