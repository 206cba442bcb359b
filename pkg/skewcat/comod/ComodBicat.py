# vim: ts=4:sw=4:expandtabs

from django.utils.translation import gettext_lazy as _

from skewcat.skew import (
    LEFT, AbstractCarrier, AxiomReport, Classification, LAWS, LEFT_UNIT, PENTAGON, RIGHT_UNIT,
    ShapeError, TRIANGLE, UNIT_UNIT, UnsupportedCarrier,
)
from skewcat.tensor import Morphism, braiding, compose, tensor

from .composable import composable_pairs, composable_triples


def left_coaction(m):
    """
    The source leg of a comodule M: C⊗C -> C, as a left C-coaction A -> C⊗A.
    """
    C = m.tgt
    return tensor(Morphism.identity(C.word), C.counit, Morphism.identity(m.word)) @ m.left


def target_coaction(m):
    """
    The target leg read on the left: A -> C⊗A.
    """
    C = m.tgt
    return tensor(C.counit, Morphism.identity(C.word), Morphism.identity(m.word)) @ m.left


class ComodBicat(AbstractCarrier):
    """
    Left skew monoidales on a coalgebra C in Comod(V): tensor M: C⊗C -> C,
    unit ε*: I -> C, α on M∘(M⊗1), λ: M∘(ε*⊗1) => 1 and ρ: 1 => M∘(1⊗ε*).

    Composites of M are kept in the normal forms A ⊗_C A and A ⊗_C A ⊗_C A, where A is the
    underlying space of M, and the unit composites are identified with A. Then α is a map
    A⊗A -> A⊗A listing the new inner factor first, λ is a map A -> C and ρ a map C -> A,
    and the canonical isos of Comod(V) become counits and coactions.
    """
    name = 'comod'

    def _require_left(self, structure):
        if structure.chirality != LEFT:
            raise UnsupportedCarrier(_('Comod monoidales are checked in left chirality only.'))

    def validate_shapes(self, structure):
        m = structure.tensor
        A, C = m.word, m.tgt.word
        shapes = (
            ('α', structure.assoc, A + A, A + A),
            ('λ', structure.left_unit, A, C),
            ('ρ', structure.right_unit, C, A),
        )
        for label, f, dom, cod in shapes:
            if f.dom != dom or f.cod != cod:
                msg = _('{label} of {name} has shape {fdom} -> {fcod}, expected {dom} -> {cod}.')
                raise ShapeError(msg.format(label=label, name=structure.name, fdom=f.dom, fcod=f.cod,
                                            dom=dom, cod=cod))

    def check(self, structure, objs=None):
        self._require_left(structure)
        self.validate_shapes(structure)

        m = structure.tensor
        A, C = m.word, m.tgt
        one = Morphism.identity(A)
        alpha, lam, rho = structure.assoc, structure.left_unit, structure.right_unit
        eps = C.counit @ lam
        l, r = left_coaction(m), m.right
        P, T = composable_pairs(l, r), composable_triples(l, r)
        swap = braiding(A, A)

        report = AxiomReport(structure.name)
        report.check_equal(
            PENTAGON, LAWS[PENTAGON],
            compose(tensor(one, alpha), tensor(swap, one), tensor(one, alpha), T),
            compose(tensor(alpha, one), tensor(one, alpha), tensor(alpha, one), T),
        )
        report.check_equal(TRIANGLE, LAWS[TRIANGLE], compose(tensor(eps, one), alpha, tensor(rho, one), l), one)
        report.check_equal(LEFT_UNIT, LAWS[LEFT_UNIT], compose(tensor(one, eps), alpha, P), tensor(eps, one) @ P)
        report.check_equal(RIGHT_UNIT, LAWS[RIGHT_UNIT],
                           compose(alpha, tensor(one, rho), r), compose(tensor(rho, one), target_coaction(m)))
        report.check_equal(UNIT_UNIT, LAWS[UNIT_UNIT], lam @ rho, Morphism.identity(C.word))
        return report

    def classify(self, structure, objs=None):
        """
        Hopf when α maps A ⊗_C A isomorphically onto the pairs with a common target.
        """
        self._require_left(structure)
        self.validate_shapes(structure)
        m = structure.tensor
        one = Morphism.identity(m.word)
        P = composable_pairs(left_coaction(m), m.right)
        cospans = (tensor(m.right, one) - tensor(one, target_coaction(m))).kernel()
        image = structure.assoc @ P
        return Classification(
            hopf=image.rank() == P.dom.dim == cospans.dom.dim,
            left_normal=structure.left_unit.is_invertible(),
            right_normal=structure.right_unit.is_invertible(),
        )

    def dualize(self, structure, mode):
        raise UnsupportedCarrier(_('The {mode} dual is not available for Comod monoidales.').format(mode=mode))

    def inverse(self, structure):
        raise UnsupportedCarrier(_('Inverse constraints are not available for Comod monoidales.'))
