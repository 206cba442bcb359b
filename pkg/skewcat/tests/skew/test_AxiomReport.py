# vim: ts=4:sw=4:expandtabs

from django.test import SimpleTestCase

from skewcat.skew import FAIL, PASS, AxiomReport
from skewcat.tensor import GenSpace, Morphism


class AxiomReportTestCase(SimpleTestCase):
    """
    Test cases for skewcat.skew.AxiomReport.
    """
    def test_stops_at_first_counterexample(self):
        seen = []

        def evaluate(n):
            seen.append(n)
            return n % 3, 0

        report = AxiomReport('numbers')
        result = report.check('divisible', 'n = 0 mod 3', [(0,), (3,), (4,), (5,)], evaluate)
        self.assertEqual(result.status, FAIL)
        self.assertEqual(result.witness, ['4'])
        self.assertEqual(seen, [0, 3, 4])
        self.assertFalse(report.passed)
        self.assertEqual(report.failing(), {'divisible'})

    def test_check_equal_and_lookup(self):
        report = AxiomReport('s')
        report.check_equal('a', 'x = x', 1, 1)
        report.check_equal('b', 'x = y', 1, 2)
        self.assertEqual(report['a'].status, PASS)
        self.assertEqual(report.names(), ['a', 'b'])
        self.assertEqual(len(report), 2)
        with self.assertRaises(KeyError):
            report['c']

    def test_json_keeps_failing_sides(self):
        f = Morphism.identity(GenSpace('U', 2))
        report = AxiomReport('s')
        report.check_equal('law', 'f = 2f', f, f.scale(2))
        data = report.to_json()
        self.assertEqual(data['axioms'][0]['lhs'], f.to_json())
        self.assertEqual(AxiomReport.from_json(data).to_json(), data)

    def test_extend(self):
        first, second = AxiomReport('a'), AxiomReport('b')
        first.check_equal('x', '', 1, 1)
        second.check_equal('y', '', 1, 0)
        first.extend(second)
        self.assertEqual(first.names(), ['x', 'y'])
        self.assertEqual(first.failing(), {'y'})
