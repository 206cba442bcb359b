# vim: ts=4:sw=4:expandtabs

from .AbstractCarrier import (
    AbstractCarrier, Classification, LAWS, LEFT_UNIT, PENTAGON, RIGHT_UNIT, SKEW_AXIOMS,
    TRIANGLE, UNIT_UNIT,
)
from .AxiomReport import FAIL, PASS, AxiomReport, AxiomResult
from .MatrixSandbox import MatrixSandbox, monoidal_structure
from .SandboxObjects import SandboxObjects
from .SkewException import NotInvertible, ShapeError, SkewException, UnsupportedCarrier
from .SkewStructure import LEFT, OP, REV, RIGHT, SkewStructure, opposite
from .TensorProduct import TensorProduct


def check_skew_axioms(structure, objs=None):
    return structure.carrier.check(structure, objs)


def classify(structure, objs=None):
    return structure.carrier.classify(structure, objs)


def dualize(structure, mode):
    return structure.carrier.dualize(structure, mode)
