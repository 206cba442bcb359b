# vim: ts=4:sw=4:expandtabs

from django.test import SimpleTestCase

from skewcat.comod import linearize_category_monoidale, quantum_to_skew
from skewcat.comod.corpus import quantum_category
from skewcat.skew import OP, REV, SKEW_AXIOMS, TRIANGLE, UNIT_UNIT, Classification, ShapeError, UnsupportedCarrier
from skewcat.span.corpus import category
from skewcat.tensor import Morphism


class ComodBicatTestCase(SimpleTestCase):
    """
    Test cases for skewcat.comod.ComodBicat.
    """
    def test_classify(self):
        test_cases = [
            (quantum_to_skew(quantum_category('discrete(2)')), Classification(True, True, True)),
            (linearize_category_monoidale(category('Z/3')), Classification(True, False, False)),
            (quantum_to_skew(quantum_category('arrow')), Classification(False, False, False)),
            (quantum_to_skew(quantum_category('trivial')), Classification(True, True, True)),
            (quantum_to_skew(quantum_category('k[Z/2]')), Classification(True, False, False)),
            (quantum_to_skew(quantum_category('chaotic(k{x,y})')), Classification(True, False, False)),
            (quantum_to_skew(quantum_category('chaotic(k[a->b])')), Classification(True, False, False)),
        ]
        for structure, expected in test_cases:
            self.assertEqual(structure.classify(), expected, structure.name)

    def test_path_coalgebra(self):
        s = quantum_to_skew(quantum_category('chaotic(k[a->b])'))
        s.tensor.validate()
        s.unit.validate()
        report = s.check()
        self.assertTrue(report.passed, report.failing())
        self.assertEqual(report.names(), list(SKEW_AXIOMS))

    def test_scaled_left_unit(self):
        s = quantum_to_skew(quantum_category('k[Z/2]'))
        self.assertEqual(s.replace(left_unit=s.left_unit.scale(2)).check().failing(), {TRIANGLE, UNIT_UNIT})

    def test_shapes(self):
        s = quantum_to_skew(quantum_category('k[Z/2]'))
        with self.assertRaises(ShapeError):
            s.replace(left_unit=Morphism.identity(s.tensor.word)).check()
        with self.assertRaises(ShapeError):
            s.replace(right_unit=Morphism.identity(s.tensor.word)).classify()

    def test_no_duals(self):
        s = quantum_to_skew(quantum_category('trivial'))
        for mode in (OP, REV):
            with self.assertRaises(UnsupportedCarrier):
                s.dualize(mode)
        with self.assertRaises(UnsupportedCarrier):
            s.inverse()
