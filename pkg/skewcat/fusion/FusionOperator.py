# vim: ts=4:sw=4:expandtabs

from skewcat.tensor import Morphism, braiding, compose, tensor


class FusionOperator(object):
    """
    A map V: A⊗A -> A⊗A, lax when V₂₃V₁₂ = V₁₂V₁₃V₂₃ on A⊗A⊗A.
    """
    def __init__(self, space, V, name=''):
        self.space = space
        self.V = V
        self.name = name

    def legs(self):
        """
        Return (V₁₂, V₁₃, V₂₃) with V₁₃ = (c⊗1)(1⊗V)(c⊗1)⁻¹.
        """
        one = Morphism.identity(self.space)
        swap = tensor(braiding(self.space, self.space), one)
        v12 = tensor(self.V, one)
        v23 = tensor(one, self.V)
        v13 = compose(swap, v23, swap.inverse())
        return v12, v13, v23

    def sides(self):
        v12, v13, v23 = self.legs()
        return v23 @ v12, compose(v12, v13, v23)

    def is_lax(self):
        lhs, rhs = self.sides()
        return lhs == rhs

    def __repr__(self):
        return '<FusionOperator {0} on {1}>'.format(self.name, self.space)
