# vim: ts=4:sw=4:expandtabs
"""
Cotensor powers A ⊗_C A and A ⊗_C A ⊗_C A of a C-bicomodule, as inclusions into A⊗A and
A⊗A⊗A. These are the linear versions of composable pairs and triples.
"""

from skewcat.tensor import Morphism, stack, tensor


def composable_pairs(left, right):
    """
    left: A -> C⊗A and right: A -> A⊗C. Returns the kernel of r⊗1 - 1⊗l.
    """
    one = Morphism.identity(left.dom)
    return (tensor(right, one) - tensor(one, left)).kernel()


def composable_triples(left, right):
    one = Morphism.identity(left.dom)
    return stack(
        tensor(right, one, one) - tensor(one, left, one),
        tensor(one, right, one) - tensor(one, one, left),
    ).kernel()
