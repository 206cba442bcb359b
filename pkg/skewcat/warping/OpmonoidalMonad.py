# vim: ts=4:sw=4:expandtabs

from skewcat.skew import AxiomReport, SandboxObjects
from skewcat.tensor import Morphism

from .OpmonoidalFunctorWitness import OpmonoidalFunctorWitness

MONAD_ASSOC = 'monad-assoc'
MONAD_LEFT_UNIT = 'monad-left-unit'
MONAD_RIGHT_UNIT = 'monad-right-unit'
MU_OPMONOIDAL = 'mu-opmonoidal'
MU_OPMONOIDAL_UNIT = 'mu-opmonoidal-unit'
ETA_OPMONOIDAL = 'eta-opmonoidal'
ETA_OPMONOIDAL_UNIT = 'eta-opmonoidal-unit'

LAWS = {
    MONAD_ASSOC: 'μ(A)T(μ(A)) = μ(A)μ(TA)',
    MONAD_LEFT_UNIT: 'μ(A)η(TA) = 1',
    MONAD_RIGHT_UNIT: 'μ(A)T(η(A)) = 1',
    MU_OPMONOIDAL: 'ψ(A,B)μ(A⊗B) = (μ(A)⊗μ(B))ψ(TA,TB)T(ψ(A,B))',
    MU_OPMONOIDAL_UNIT: 'ψ0 μ(I) = ψ0 T(ψ0)',
    ETA_OPMONOIDAL: 'ψ(A,B)η(A⊗B) = η(A)⊗η(B)',
    ETA_OPMONOIDAL_UNIT: 'ψ0 η(I) = 1',
}


class OpmonoidalMonad(object):
    """
    A monad (T, μ, η) on a left skew structure `base` whose functor is opmonoidal via
    ψ(A,B): T(A⊗B) -> TA⊗TB and ψ0: TI -> I, with μ and η opmonoidal transformations.
    """
    def __init__(self, T, mu, eta, psi, psi0, base, name=''):
        self.T = T
        self.mu = mu
        self.eta = eta
        self.psi = psi
        self.psi0 = psi0
        self.base = base
        self.name = name

    def opmonoidal_witness(self):
        return OpmonoidalFunctorWitness(self.T, self.psi, self.psi0, self.base, self.base)

    def check(self, objs=None):
        objs = objs or SandboxObjects.default()
        T, mu, eta, psi, psi0 = self.T, self.mu, self.eta, self.psi, self.psi0
        obj, arr, I = self.base.tensor.obj, self.base.tensor.arr, self.base.unit

        report = AxiomReport(self.name)
        report.check(MONAD_ASSOC, LAWS[MONAD_ASSOC], objs.tuples(1),
                     lambda a: (mu(a) @ T.arr(mu(a)), mu(a) @ mu(T(a))))
        report.check(MONAD_LEFT_UNIT, LAWS[MONAD_LEFT_UNIT], objs.tuples(1),
                     lambda a: (mu(a) @ eta(T(a)), Morphism.identity(T(a))))
        report.check(MONAD_RIGHT_UNIT, LAWS[MONAD_RIGHT_UNIT], objs.tuples(1),
                     lambda a: (mu(a) @ T.arr(eta(a)), Morphism.identity(T(a))))
        report.extend(self.opmonoidal_witness().check(objs))
        report.check(MU_OPMONOIDAL, LAWS[MU_OPMONOIDAL], objs.tuples(2), lambda a, b: (
            psi(a, b) @ mu(obj(a, b)),
            arr(mu(a), mu(b)) @ psi(T(a), T(b)) @ T.arr(psi(a, b)),
        ))
        report.check(MU_OPMONOIDAL_UNIT, LAWS[MU_OPMONOIDAL_UNIT], [()],
                     lambda: (psi0 @ mu(I), psi0 @ T.arr(psi0)))
        report.check(ETA_OPMONOIDAL, LAWS[ETA_OPMONOIDAL], objs.tuples(2),
                     lambda a, b: (psi(a, b) @ eta(obj(a, b)), arr(eta(a), eta(b))))
        report.check(ETA_OPMONOIDAL_UNIT, LAWS[ETA_OPMONOIDAL_UNIT], [()],
                     lambda: (psi0 @ eta(I), Morphism.identity(I)))
        return report

    def same_as(self, other, objs=None):
        """
        Component-wise equality on the sandbox.
        """
        objs = objs or SandboxObjects.default()
        return (
            self.T == other.T
            and self.psi0 == other.psi0
            and all(self.mu(a) == other.mu(a) and self.eta(a) == other.eta(a) for a in objs)
            and all(self.psi(a, b) == other.psi(a, b) for a, b in objs.tuples(2))
        )

    def __repr__(self):
        return '<OpmonoidalMonad {0} on {1}>'.format(self.name, self.T)
