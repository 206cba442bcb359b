# vim: ts=4:sw=4:expandtabs


class AbstractBraiding(object):
    """
    Defines interface for pluggable braidings on tensor words.
    """
    def braid(self, left, right):
        """
        Return the Morphism c_{X,Y}: X⊗Y -> Y⊗X for TensorWords X=left, Y=right.
        Implementations must satisfy both hexagon identities and naturality.
        """
        raise NotImplementedError()

    def unbraid(self, left, right):
        """
        Return c⁻¹_{X,Y}: Y⊗X -> X⊗Y. The default inverts braid(); signed permutation
        braidings may override with the transpose.
        """
        return self.braid(left, right).inverse()
