# vim: ts=4:sw=4:expandtabs

from skewcat.skew import AxiomReport, SandboxObjects
from skewcat.tensor import Morphism

WARP_ASSOC = 'warp-assoc'
WARP_UNIT_LEFT = 'warp-unit-left'
WARP_UNIT_RIGHT = 'warp-unit-right'
WARP_UNIT_ASSOC = 'warp-unit-assoc'
WARP_UNIT_UNIT = 'warp-unit-unit'

WARPING_AXIOMS = (WARP_ASSOC, WARP_UNIT_LEFT, WARP_UNIT_RIGHT, WARP_UNIT_ASSOC, WARP_UNIT_UNIT)

LAWS = {
    WARP_ASSOC: 'α(TA,TB,TC)(v(A,B)⊗1)v(TA⊗B,C) = (1⊗v(B,C))v(A,TB⊗C)T(α(TA,TB,C))T(v(A,B)⊗1)',
    WARP_UNIT_LEFT: 'λ(TB)(v0⊗1)v(K,B) = T(λ(B))T(v0⊗1)',
    WARP_UNIT_RIGHT: '(1⊗v0)v(A,K)T(k(A)) = ρ(TA)',
    WARP_UNIT_ASSOC: 'α(TA,TB,K)(v(A,B)⊗1)k(TA⊗B) = 1⊗k(B)',
    WARP_UNIT_UNIT: 'λ(K)(v0⊗1)k(K) = 1',
}


class SkewLeftWarping(object):
    """
    Data (T, K, v, v0, k) on a left skew structure `base`:

        v(A,B): T(TA⊗B) -> TA⊗TB,   v0: TK -> I,   k(A): A -> TA⊗K.
    """
    def __init__(self, T, K, v, v0, k, base, name=''):
        self.T = T
        self.K = K
        self.v = v
        self.v0 = v0
        self.k = k
        self.base = base
        self.name = name

    def replace(self, **changes):
        fields = dict(T=self.T, K=self.K, v=self.v, v0=self.v0, k=self.k, base=self.base, name=self.name)
        fields.update(changes)
        return SkewLeftWarping(**fields)

    def check(self, objs=None):
        objs = objs or SandboxObjects.default()
        T, K, v, v0, k = self.T, self.K, self.v, self.v0, self.k
        base = self.base
        obj, arr = base.tensor.obj, base.tensor.arr
        alpha, lam, rho = base.assoc, base.left_unit, base.right_unit
        one = Morphism.identity

        def warp_assoc(a, b, c):
            ta, tb, tc = T(a), T(b), T(c)
            lhs = alpha(ta, tb, tc) @ arr(v(a, b), one(tc)) @ v(obj(ta, b), c)
            rhs = (arr(one(ta), v(b, c)) @ v(a, obj(tb, c))
                   @ T.arr(alpha(ta, tb, c)) @ T.arr(arr(v(a, b), one(c))))
            return lhs, rhs

        def warp_unit_left(b):
            lhs = lam(T(b)) @ arr(v0, one(T(b))) @ v(K, b)
            return lhs, T.arr(lam(b)) @ T.arr(arr(v0, one(b)))

        def warp_unit_right(a):
            return arr(one(T(a)), v0) @ v(a, K) @ T.arr(k(a)), rho(T(a))

        def warp_unit_assoc(a, b):
            ta = T(a)
            lhs = alpha(ta, T(b), K) @ arr(v(a, b), one(K)) @ k(obj(ta, b))
            return lhs, arr(one(ta), k(b))

        def warp_unit_unit():
            return lam(K) @ arr(v0, one(K)) @ k(K), one(K)

        report = AxiomReport(self.name)
        report.check(WARP_ASSOC, LAWS[WARP_ASSOC], objs.tuples(3), warp_assoc)
        report.check(WARP_UNIT_LEFT, LAWS[WARP_UNIT_LEFT], objs.tuples(1), warp_unit_left)
        report.check(WARP_UNIT_RIGHT, LAWS[WARP_UNIT_RIGHT], objs.tuples(1), warp_unit_right)
        report.check(WARP_UNIT_ASSOC, LAWS[WARP_UNIT_ASSOC], objs.tuples(2), warp_unit_assoc)
        report.check(WARP_UNIT_UNIT, LAWS[WARP_UNIT_UNIT], [()], warp_unit_unit)
        return report

    def is_hopf(self, objs=None):
        objs = objs or SandboxObjects.default()
        return all(self.v(a, b).is_invertible() for a, b in objs.tuples(2))

    def same_as(self, other, objs=None):
        objs = objs or SandboxObjects.default()
        return (
            self.T == other.T and self.K == other.K and self.v0 == other.v0
            and all(self.k(a) == other.k(a) for a in objs)
            and all(self.v(a, b) == other.v(a, b) for a, b in objs.tuples(2))
        )

    def __repr__(self):
        return '<SkewLeftWarping {0}: T = {1}, K = {2}>'.format(self.name, self.T, self.K)
