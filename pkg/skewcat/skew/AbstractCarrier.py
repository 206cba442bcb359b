# vim: ts=4:sw=4:expandtabs

from collections import namedtuple

PENTAGON = 'pentagon'
TRIANGLE = 'triangle'
LEFT_UNIT = 'left-unit'
RIGHT_UNIT = 'right-unit'
UNIT_UNIT = 'unit-unit'

SKEW_AXIOMS = (PENTAGON, TRIANGLE, LEFT_UNIT, RIGHT_UNIT, UNIT_UNIT)

LAWS = {
    PENTAGON: 'α(W,X,Y∗Z)∘α(W∗X,Y,Z) = (1∗α(X,Y,Z))∘α(W,X∗Y,Z)∘(α(W,X,Y)∗1)',
    TRIANGLE: '(1∗λ(Y))∘α(X,J,Y)∘(ρ(X)∗1) = 1',
    LEFT_UNIT: 'λ(X∗Y)∘α(J,X,Y) = λ(X)∗1',
    RIGHT_UNIT: 'α(X,Y,J)∘ρ(X∗Y) = 1∗ρ(Y)',
    UNIT_UNIT: 'λ(J)∘ρ(J) = 1',
}


class Classification(namedtuple('Classification', 'hopf left_normal right_normal')):
    @property
    def monoidal(self):
        return self.hopf and self.left_normal and self.right_normal

    def to_json(self):
        return dict(self._asdict())


class AbstractCarrier(object):
    """
    Defines interface for the bicategories a SkewStructure can live in.
    """
    name = None

    def check(self, structure, objs=None):
        """
        Evaluate the five skew axioms (named in SKEW_AXIOMS) and return an AxiomReport.
        Raise ShapeError if a constraint has the wrong source or target.
        """
        raise NotImplementedError()

    def classify(self, structure, objs=None):
        """
        Return a Classification: invertibility of α, λ and ρ respectively.
        """
        raise NotImplementedError()

    def dualize(self, structure, mode):
        """
        Return the op or rev dual, a structure of the opposite chirality. Raise
        UnsupportedCarrier where the duality is not implemented.
        """
        raise NotImplementedError()

    def inverse(self, structure):
        raise NotImplementedError()

    def __repr__(self):
        return self.name or self.__class__.__name__
