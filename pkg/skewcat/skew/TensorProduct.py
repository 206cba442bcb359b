# vim: ts=4:sw=4:expandtabs

from skewcat.tensor import Morphism, TensorWord, tensor


class TensorProduct(object):
    """
    A tensor product functor on the matrix sandbox: `obj` acts on TensorWords and `arr` on
    Morphisms, with arr(f, g): obj(dom f, dom g) -> obj(cod f, cod g).
    """
    def __init__(self, obj, arr, description=''):
        self.obj = obj
        self.arr = arr
        self.description = description

    @classmethod
    def whiskered(cls, prefix=None, middle=None):
        """
        X∗Y = P⊗X⊗M⊗Y and f∗g = 1_P⊗f⊗1_M⊗g. With P = M = I this is the tensor of words.
        """
        prefix = prefix if prefix is not None else TensorWord.unit()
        middle = middle if middle is not None else TensorWord.unit()
        one_p, one_m = Morphism.identity(prefix), Morphism.identity(middle)

        def obj(x, y):
            return prefix + x + middle + y

        def arr(f, g):
            return tensor(one_p, f, one_m, g)

        description = '{0}⊗X⊗{1}⊗Y'.format(prefix, middle)
        return cls(obj, arr, description)

    def reversed(self):
        return TensorProduct(lambda x, y: self.obj(y, x), lambda f, g: self.arr(g, f),
                             'rev({0})'.format(self.description))

    def transposed(self):
        """
        The same tensor read in the opposite category.
        """
        return TensorProduct(self.obj, lambda f, g: self.arr(f.transpose(), g.transpose()).transpose(),
                             'op({0})'.format(self.description))

    def __call__(self, x, y):
        return self.obj(x, y)

    def __repr__(self):
        return 'TensorProduct({0})'.format(self.description)
