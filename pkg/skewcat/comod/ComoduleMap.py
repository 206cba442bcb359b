# vim: ts=4:sw=4:expandtabs

import logging

from django.utils.translation import gettext_lazy as _

from skewcat.tensor import GenSpace, Morphism, TensorWord, stack, tensor

from .ComodException import BoundaryMismatch, NotAComoduleMap

logger = logging.getLogger(__name__)

# deterministic weightings tried when looking for an invertible element of a Hom space
_WEIGHTINGS = (
    lambda k: k + 1,
    lambda k: 2 ** k,
    lambda k: (k + 1) ** 2 + 1,
    lambda k: 1 if k % 2 == 0 else -1,
)


def _parallel(m, n):
    return m.src == n.src and m.tgt == n.tgt


class ComoduleMap(object):
    """
    A 2-cell f: M => N of Comod(V), checked to commute with both coactions.
    """
    def __init__(self, dom, cod, f, name=''):
        if not _parallel(dom, cod):
            raise BoundaryMismatch(_('{name}: {dom} and {cod} are not parallel.')
                                   .format(name=name, dom=dom, cod=cod))
        if f.dom != dom.word or f.cod != cod.word:
            raise NotAComoduleMap(_('{name} has shape {fdom} -> {fcod}.')
                                  .format(name=name, fdom=f.dom, fcod=f.cod))
        self.dom = dom
        self.cod = cod
        self.f = f
        self.name = name

        C, D = dom.src.word, dom.tgt.word
        if cod.left @ f != tensor(Morphism.identity(C), f) @ dom.left:
            raise NotAComoduleMap(_('{name} does not commute with the left coactions.').format(name=name))
        if cod.right @ f != tensor(f, Morphism.identity(D)) @ dom.right:
            raise NotAComoduleMap(_('{name} does not commute with the right coactions.').format(name=name))

    @classmethod
    def identity(cls, m):
        return cls(m, m, Morphism.identity(m.word), 'id')

    def then(self, other):
        return ComoduleMap(self.dom, other.cod, other.f @ self.f, '{0}.{1}'.format(self.name, other.name))

    def is_invertible(self):
        return self.f.is_invertible()

    def inverse(self):
        inv = self.f.inverse()
        if inv is None:
            return None
        return ComoduleMap(self.cod, self.dom, inv, '{0}⁻¹'.format(self.name))

    def __eq__(self, other):
        return isinstance(other, ComoduleMap) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return '<ComoduleMap {0}: {1} => {2}>'.format(self.name, self.dom.name, self.cod.name)


def hom_space(m, n):
    """
    A basis of the comodule maps M => N, as Morphisms M -> N.
    """
    if not _parallel(m, n):
        raise BoundaryMismatch(_('{m} and {n} are not parallel.').format(m=m, n=n))
    M, N = m.word, n.word
    C, D = m.src.word, m.tgt.word
    one_c, one_d = Morphism.identity(C), Morphism.identity(D)

    # one unknown per matrix entry; column k holds the coaction defects of the k-th matrix unit
    unknowns = [(i, j) for i in range(N.dim) for j in range(M.dim)]
    cells = TensorWord.of(GenSpace.anonymous(len(unknowns), 'hom'))
    width = M.dim
    left_rows, right_rows = {}, {}
    for k, (i, j) in enumerate(unknowns):
        e = Morphism.from_entries(M, N, {i: {j: 1}})
        left_defect = n.left @ e - tensor(one_c, e) @ m.left
        right_defect = n.right @ e - tensor(e, one_d) @ m.right
        for rows, defect in ((left_rows, left_defect), (right_rows, right_defect)):
            for r, row in defect.entries().items():
                for c, v in row.items():
                    rows.setdefault(r * width + c, {})[k] = v

    left_defects = TensorWord.of(GenSpace.anonymous(N.dim * C.dim * M.dim, 'defect'))
    right_defects = TensorWord.of(GenSpace.anonymous(N.dim * D.dim * M.dim, 'defect'))
    left = Morphism.from_entries(cells, left_defects, left_rows)
    right = Morphism.from_entries(cells, right_defects, right_rows)
    solutions = stack(left, right).kernel()

    basis = []
    for k in range(solutions.dom.dim):
        column = solutions.column(k)
        entries = {}
        for index, v in column.items():
            i, j = unknowns[index]
            entries.setdefault(i, {})[j] = v
        basis.append(Morphism.from_entries(M, N, entries))
    logger.debug('Hom(%s, %s) has dimension %d', m.name, n.name, len(basis))
    return basis


def find_isomorphism(m, n):
    """
    An explicit comodule isomorphism M => N among a few deterministic weighted sums of a
    Hom basis, or None.
    """
    if not _parallel(m, n) or m.dim != n.dim:
        return None
    if m.dim == 0:
        return ComoduleMap(m, n, Morphism.zero(m.word, n.word), 'iso')
    basis = hom_space(m, n)
    if not basis:
        return None
    for weight in _WEIGHTINGS:
        candidate = Morphism.zero(m.word, n.word)
        for k, b in enumerate(basis):
            candidate = candidate + b.scale(weight(k))
        if candidate.is_invertible():
            return ComoduleMap(m, n, candidate, 'iso')
    return None
