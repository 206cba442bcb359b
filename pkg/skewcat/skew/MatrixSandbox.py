# vim: ts=4:sw=4:expandtabs

import logging
from functools import lru_cache

from django.utils.translation import gettext_lazy as _

from skewcat.tensor import Morphism, TensorWord

from .AbstractCarrier import (
    AbstractCarrier, Classification, LAWS, LEFT_UNIT, PENTAGON, RIGHT_UNIT, TRIANGLE, UNIT_UNIT,
)
from .AxiomReport import AxiomReport
from .SandboxObjects import SandboxObjects
from .SkewException import NotInvertible, ShapeError, UnsupportedCarrier
from .SkewStructure import LEFT, OP, REV, SkewStructure, opposite
from .TensorProduct import TensorProduct

logger = logging.getLogger(__name__)


def _components(structure):
    """
    Memoized constraint components for one evaluation pass.
    """
    return (
        lru_cache(maxsize=None)(structure.assoc),
        lru_cache(maxsize=None)(structure.left_unit),
        lru_cache(maxsize=None)(structure.right_unit),
    )


class MatrixSandbox(AbstractCarrier):
    """
    Skew monoidal structures on the category of tensor words and exact rational matrices,
    with natural families instantiated on a finite set of test objects.

    Every structure built in skewcat has constraints generated from a few fixed morphisms
    by tensoring with identities and braidings, so its naturality holds by construction and
    checking components on the sandbox generators is enough.
    """
    name = 'matrix'

    def _left(self, structure):
        if structure.chirality == LEFT:
            return structure
        return self.dualize(structure, REV)

    def validate_shapes(self, structure, objs):
        s = self._left(structure)
        obj, J = s.tensor.obj, s.unit
        assoc, left_unit, right_unit = _components(s)

        for x, y, z in objs.tuples(3):
            a = assoc(x, y, z)
            if a.dom != obj(obj(x, y), z) or a.cod != obj(x, obj(y, z)):
                msg = _('α({x}, {y}, {z}) has shape {dom} -> {cod}.')
                raise ShapeError(msg.format(x=x, y=y, z=z, dom=a.dom, cod=a.cod))

        for x in list(objs) + [J]:
            lam, rho = left_unit(x), right_unit(x)
            if lam.dom != obj(J, x) or lam.cod != x:
                raise ShapeError(_('λ({x}) has shape {dom} -> {cod}.').format(x=x, dom=lam.dom, cod=lam.cod))
            if rho.dom != x or rho.cod != obj(x, J):
                raise ShapeError(_('ρ({x}) has shape {dom} -> {cod}.').format(x=x, dom=rho.dom, cod=rho.cod))

    def check(self, structure, objs=None):
        objs = objs or SandboxObjects.default()
        self.validate_shapes(structure, objs)

        s = self._left(structure)
        obj, arr, J = s.tensor.obj, s.tensor.arr, s.unit
        one = Morphism.identity
        assoc, left_unit, right_unit = _components(s)

        report = AxiomReport(structure.name)

        def pentagon(w, x, y, z):
            lhs = assoc(w, x, obj(y, z)) @ assoc(obj(w, x), y, z)
            rhs = arr(one(w), assoc(x, y, z)) @ assoc(w, obj(x, y), z) @ arr(assoc(w, x, y), one(z))
            return lhs, rhs

        def triangle(x, y):
            lhs = arr(one(x), left_unit(y)) @ assoc(x, J, y) @ arr(right_unit(x), one(y))
            return lhs, one(obj(x, y))

        def left_unit_law(x, y):
            return left_unit(obj(x, y)) @ assoc(J, x, y), arr(left_unit(x), one(y))

        def right_unit_law(x, y):
            return assoc(x, y, J) @ right_unit(obj(x, y)), arr(one(x), right_unit(y))

        def unit_unit():
            return left_unit(J) @ right_unit(J), one(J)

        report.check(PENTAGON, LAWS[PENTAGON], objs.tuples(4), pentagon)
        report.check(TRIANGLE, LAWS[TRIANGLE], objs.tuples(2), triangle)
        report.check(LEFT_UNIT, LAWS[LEFT_UNIT], objs.tuples(2), left_unit_law)
        report.check(RIGHT_UNIT, LAWS[RIGHT_UNIT], objs.tuples(2), right_unit_law)
        report.check(UNIT_UNIT, LAWS[UNIT_UNIT], [()], unit_unit)
        return report

    def classify(self, structure, objs=None):
        objs = objs or SandboxObjects.default()
        s = self._left(structure)
        assoc, left_unit, right_unit = _components(s)

        return Classification(
            hopf=all(assoc(x, y, z).is_invertible() for x, y, z in objs.tuples(3)),
            left_normal=all(left_unit(x).is_invertible() for x in objs),
            right_normal=all(right_unit(x).is_invertible() for x in objs),
        )

    def dualize(self, structure, mode):
        s = structure
        if mode == REV:
            return s.replace(
                tensor=s.tensor.reversed(),
                assoc=lambda x, y, z: s.assoc(z, y, x),
                left_unit=s.right_unit,
                right_unit=s.left_unit,
                chirality=opposite(s.chirality),
                name='rev({0})'.format(s.name),
            )
        if mode == OP:
            return s.replace(
                tensor=s.tensor.transposed(),
                assoc=lambda x, y, z: s.assoc(x, y, z).transpose(),
                left_unit=lambda x: s.left_unit(x).transpose(),
                right_unit=lambda x: s.right_unit(x).transpose(),
                chirality=opposite(s.chirality),
                name='op({0})'.format(s.name),
            )
        raise UnsupportedCarrier(_('Unknown duality {mode!r}.').format(mode=mode))

    def inverse(self, structure):
        s = structure

        def inverted(component):
            def invert(*words):
                morphism = component(*words)
                inv = morphism.inverse()
                if inv is None:
                    msg = _('{name}: component {morphism} is not invertible.')
                    raise NotInvertible(msg.format(name=s.name, morphism=morphism))
                return inv
            return invert

        return s.replace(
            assoc=inverted(s.assoc),
            left_unit=inverted(s.left_unit),
            right_unit=inverted(s.right_unit),
            chirality=opposite(s.chirality),
            name='inv({0})'.format(s.name),
        )


def monoidal_structure(name='V'):
    """
    The strict monoidal structure on tensor words: concatenation, the empty word as unit
    and identity constraints.
    """
    tensor = TensorProduct.whiskered()
    return SkewStructure(
        MatrixSandbox(), tensor, TensorWord.unit(),
        assoc=lambda x, y, z: Morphism.identity(x + y + z),
        left_unit=lambda x: Morphism.identity(x),
        right_unit=lambda x: Morphism.identity(x),
        name=name,
    )
