# vim: ts=4:sw=4:expandtabs
"""
Free vector spaces on finite sets, spans and categories. Sets become group-like
coalgebras, spans become comodules and categories become quantum categories over the
coalgebra of their objects.
"""

from skewcat.tensor import Morphism

from .Comodule import Comodule
from .FinCoalgebra import FinCoalgebra
from .QuantumCategory import QuantumCategory
from .correspondence import quantum_to_skew


def linearize_finset(finset, name):
    return FinCoalgebra.grouplike(name, len(finset))


def linearize_span(span, src=None, tgt=None, name=None):
    """
    k{apex} with l(a) = left(a)⊗a and r(a) = a⊗right(a). src and tgt default to the
    linearized boundary sets.
    """
    name = name or span.name
    src = src or linearize_finset(span.src, 'k{{{0}.src}}'.format(name))
    tgt = tgt or linearize_finset(span.tgt, 'k{{{0}.tgt}}'.format(name))
    apex = linearize_finset(span.apex, 'k{{{0}}}'.format(name)).word
    elements = list(span.apex)
    n, width = len(elements), len(span.tgt)

    left = Morphism.from_function(apex, src.word + apex,
                                  lambda i: {span.src.index(span.left[elements[i]]) * n + i: 1})
    right = Morphism.from_function(apex, apex + tgt.word,
                                   lambda i: {i * width + span.tgt.index(span.right[elements[i]]): 1})
    return Comodule(src, tgt, apex, left, right, name=name)


def quantum_from_category(c, base=None):
    """
    k{morphisms} over k{objects}: s and t are the linearized source and target,
    mul(f⊗g) = f;g on composable pairs and 0 elsewhere, and unit(x) = id x.
    """
    objects, morphisms = c.objects, c.morphisms
    base = base or linearize_finset(objects, 'k{{{0}₀}}'.format(c.name))
    A = linearize_finset(morphisms, 'k{{{0}₁}}'.format(c.name))
    n = len(morphisms)
    arrows, points = list(morphisms), list(objects)

    def leg(ends):
        return Morphism.from_function(A.word, base.word, lambda i: {objects.index(ends[arrows[i]]): 1})

    def product(col):
        f, g = arrows[col // n], arrows[col % n]
        if c.target[f] != c.source[g]:
            return {}
        h = c.comp.get((f, g))
        return {morphisms.index(h): 1} if h is not None else {}

    return QuantumCategory(
        base, A,
        source=leg(c.source),
        target=leg(c.target),
        mul=Morphism.from_function(A.word + A.word, A.word, product),
        unit=Morphism.from_function(base.word, A.word,
                                    lambda x: {morphisms.index(c.identity[points[x]]): 1}),
        name=c.name,
    )


def linearize_category_monoidale(c, validate=True):
    """
    The left skew monoidale on k{objects} in Comod(V) that the linearized quantum category
    corresponds to.
    """
    return quantum_to_skew(quantum_from_category(c), validate=validate)
