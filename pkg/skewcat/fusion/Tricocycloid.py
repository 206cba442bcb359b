# vim: ts=4:sw=4:expandtabs

from skewcat.tensor import Morphism, braiding, compose, tensor


class Tricocycloid(object):
    """
    A map v: A⊗A -> A⊗A, lax when it satisfies the braided 3-cocycle condition
        (v⊗1)(1⊗c)(v⊗1) = (1⊗v)(v⊗1)(1⊗v)
    and augmented when it carries a unit η: I -> A and a counit ε: A -> I.
    """
    def __init__(self, space, v, eta=None, eps=None, name=''):
        self.space = space
        self.v = v
        self.eta = eta
        self.eps = eps
        self.name = name

    @property
    def is_augmented(self):
        return self.eta is not None and self.eps is not None

    def sides(self):
        one = Morphism.identity(self.space)
        v1, v2 = tensor(self.v, one), tensor(one, self.v)
        middle = tensor(one, braiding(self.space, self.space))
        return compose(v1, middle, v1), compose(v2, v1, v2)

    def is_tricocycloid(self):
        lhs, rhs = self.sides()
        return lhs == rhs

    def replace(self, **changes):
        fields = dict(space=self.space, v=self.v, eta=self.eta, eps=self.eps, name=self.name)
        fields.update(changes)
        return Tricocycloid(**fields)

    def __repr__(self):
        return '<Tricocycloid {0} on {1}>'.format(self.name, self.space)
