# vim: ts=4:sw=4:expandtabs

from .AbstractBraiding import AbstractBraiding
from .Morphism import Morphism
from .scalars import ONE


class KoszulBraiding(AbstractBraiding):
    """
    The symmetric braiding of (graded) vector spaces: basis vectors swap places, picking up
    a sign -1 exactly when both are odd. On ungraded words this is the plain swap.
    """
    def braid(self, left, right):
        m, n = left.dim, right.dim
        left_parity, right_parity = left.parities(), right.parities()

        def column(index):
            i, j = divmod(index, n)
            sign = -ONE if left_parity[i] and right_parity[j] else ONE
            return {j * m + i: sign}

        return Morphism.from_function(left + right, right + left, column)

    def unbraid(self, left, right):
        return self.braid(left, right).transpose()
