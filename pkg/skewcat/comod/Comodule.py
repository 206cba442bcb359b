# vim: ts=4:sw=4:expandtabs

import logging

from django.utils.translation import gettext_lazy as _

from skewcat.skew import AxiomReport
from skewcat.tensor import Morphism, braiding, compose, tensor

from .ComodException import BoundaryMismatch, NotAComodule

logger = logging.getLogger(__name__)

LEFT_COASSOCIATIVITY = 'left-coassociativity'
LEFT_COUNIT = 'left-counit'
RIGHT_COASSOCIATIVITY = 'right-coassociativity'
RIGHT_COUNIT = 'right-counit'
BICOMODULE = 'bicomodule'

COMODULE_LAWS = (LEFT_COASSOCIATIVITY, LEFT_COUNIT, RIGHT_COASSOCIATIVITY, RIGHT_COUNIT, BICOMODULE)

LAWS = {
    LEFT_COASSOCIATIVITY: '(δ⊗1)l = (1⊗l)l',
    LEFT_COUNIT: '(ε⊗1)l = 1',
    RIGHT_COASSOCIATIVITY: '(r⊗1)r = (1⊗δ)r',
    RIGHT_COUNIT: '(1⊗ε)r = 1',
    BICOMODULE: '(l⊗1)r = (1⊗r)l',
}


class Comodule(object):
    """
    A 1-cell M: C -> D of Comod(V): a left C-, right D-comodule on the word M.

    Comodules built by cotensor keep `inclusion`, the equalizer map into the tensor
    product they were cut out of.
    """
    def __init__(self, src, tgt, word, left, right, name='', inclusion=None):
        self.src = src
        self.tgt = tgt
        self.word = word
        self.left = left
        self.right = right
        self.name = name
        self.inclusion = inclusion

        if left.dom != word or left.cod != src.word + word:
            raise NotAComodule(_('Left coaction of {name} has shape {dom} -> {cod}.')
                               .format(name=name, dom=left.dom, cod=left.cod))
        if right.dom != word or right.cod != word + tgt.word:
            raise NotAComodule(_('Right coaction of {name} has shape {dom} -> {cod}.')
                               .format(name=name, dom=right.dom, cod=right.cod))

    @classmethod
    def identity(cls, coalgebra):
        """
        1_C: C with δ as both coactions.
        """
        return cls(coalgebra, coalgebra, coalgebra.word, coalgebra.comul, coalgebra.comul,
                   name='1_{0}'.format(coalgebra.name))

    @property
    def dim(self):
        return self.word.dim

    def check(self):
        C, D = self.src, self.tgt
        one = Morphism.identity(self.word)
        l, r = self.left, self.right

        report = AxiomReport(self.name)
        report.check_equal(LEFT_COASSOCIATIVITY, LAWS[LEFT_COASSOCIATIVITY],
                           tensor(C.comul, one) @ l, tensor(Morphism.identity(C.word), l) @ l)
        report.check_equal(LEFT_COUNIT, LAWS[LEFT_COUNIT], tensor(C.counit, one) @ l, one)
        report.check_equal(RIGHT_COASSOCIATIVITY, LAWS[RIGHT_COASSOCIATIVITY],
                           tensor(r, Morphism.identity(D.word)) @ r, tensor(one, D.comul) @ r)
        report.check_equal(RIGHT_COUNIT, LAWS[RIGHT_COUNIT], tensor(one, D.counit) @ r, one)
        report.check_equal(BICOMODULE, LAWS[BICOMODULE],
                           tensor(l, Morphism.identity(D.word)) @ r, tensor(Morphism.identity(C.word), r) @ l)
        return report

    def validate(self):
        report = self.check()
        if not report.passed:
            msg = _('{name} is not a comodule: {failing} fails.')
            raise NotAComodule(msg.format(name=self.name, failing=', '.join(sorted(report.failing()))), report)
        return self

    def to_json(self):
        return {'name': self.name, 'src': self.src.name, 'tgt': self.tgt.name, 'dim': self.dim}

    def __repr__(self):
        return '<Comodule {0}: {1} -> {2}, dim {3}>'.format(self.name, self.src.name, self.tgt.name, self.dim)


def _restrict(inclusion, f, target_inclusion):
    """
    Corestrict f∘inclusion through target_inclusion, checking that it factors.
    """
    image = f @ inclusion
    restricted = target_inclusion.left_inverse() @ image
    if target_inclusion @ restricted != image:
        raise NotAComodule(_('Induced coaction does not factor through the cotensor product.'))
    return restricted


def cotensor(m, n, name=None):
    """
    The composite N∘M = M ⊗_D N of m: C -> D and n: D -> E, cut out of M⊗N as the kernel
    of r_M⊗1 - 1⊗l_N, with the outer coactions induced from m and n.
    """
    if m.tgt != n.src:
        raise BoundaryMismatch(_('Cannot compose {n} after {m}: {d1} is not {d2}.')
                               .format(n=n.name, m=m.name, d1=m.tgt.name, d2=n.src.name))
    C, E = m.src, n.tgt
    one_m, one_n = Morphism.identity(m.word), Morphism.identity(n.word)
    inclusion = (tensor(m.right, one_n) - tensor(one_m, n.left)).kernel()
    K = inclusion.dom

    left = _restrict(inclusion, tensor(m.left, one_n), tensor(Morphism.identity(C.word), inclusion))
    right = _restrict(inclusion, tensor(one_m, n.right), tensor(inclusion, Morphism.identity(E.word)))
    logger.debug('cotensor %s over %s: %d of %d', name or n.name, m.tgt.name, K.dim, m.dim * n.dim)
    return Comodule(C, E, K, left, right, name=name or '{0}∘{1}'.format(n.name, m.name), inclusion=inclusion)


def tensor_comodules(m, n, name=None):
    """
    m⊗n: C⊗C' -> D⊗D' on M⊗N, coactions reordered by the braiding.
    """
    M, N = m.word, n.word
    C2, D1 = n.src.word, m.tgt.word
    left = compose(
        tensor(Morphism.identity(m.src.word), braiding(M, C2), Morphism.identity(N)),
        tensor(m.left, n.left),
    ) if not C2.is_unit else tensor(m.left, Morphism.identity(N))
    right = compose(
        tensor(Morphism.identity(M), braiding(D1, N), Morphism.identity(n.tgt.word)),
        tensor(m.right, n.right),
    ) if not D1.is_unit else tensor(Morphism.identity(M), n.right)
    return Comodule(m.src * n.src, m.tgt * n.tgt, M + N, left, right,
                    name=name or '{0}⊗{1}'.format(m.name, n.name))
