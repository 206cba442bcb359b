# vim: ts=4:sw=4:expandtabs

import json

from django.test import SimpleTestCase, override_settings

from skewcat.skew import AxiomReport
from skewcat.tensor import Morphism, TensorWord
from skewcat.utils import EXIT_AXIOM_FAILURE, EXIT_MALFORMED, EXIT_PASS, RunReport


def sample_report():
    I = TensorWord.unit()
    checks = AxiomReport('sample')
    checks.check_equal('unit-unit', 'λρ = 1', Morphism.identity(I).scale(2), Morphism.identity(I))
    checks.check('pentagon', 'both ways around agree', [(1, 2), (3, 4)], lambda a, b: (a + b, b + a))
    return RunReport('validate', 'skew', 'sample.json', 0, 1, {'skew': checks}, {'hopf': False})


class RunReportTestCase(SimpleTestCase):
    """
    Test cases for skewcat.utils.RunReport.
    """
    def test_status(self):
        self.assertEqual(RunReport('validate', 'skew').status, EXIT_PASS)
        self.assertEqual(sample_report().status, EXIT_AXIOM_FAILURE)

        report = sample_report().fail(EXIT_MALFORMED, 'FixtureError', 'expected a row', '$.maps')
        self.assertEqual(report.status, EXIT_MALFORMED)
        self.assertEqual(report.to_json()['error']['path'], '$.maps')

    def test_json(self):
        data = sample_report().to_json()
        self.assertEqual(data['header']['schema'], 1)
        self.assertEqual(data['status'], EXIT_AXIOM_FAILURE)
        self.assertEqual([r['status'] for r in data['checks']['skew']['axioms']], ['fail', 'pass'])
        self.assertEqual(data['checks']['skew']['axioms'][0]['lhs']['matrix'], [['2']])

    @override_settings(SKEWCAT_SCHEMA_VERSION=3)
    def test_schema_header(self):
        self.assertEqual(sample_report().header['schema'], 3)

    def test_roundtrip(self):
        text = sample_report().dumps()
        self.assertEqual(RunReport.from_json(json.loads(text)).dumps(), text)

    def test_text(self):
        text = sample_report().to_text()
        self.assertTrue(text.startswith('validate skew sample.json (seed 0, threads 1)'))
        self.assertIn('[skew] sample', text)
        self.assertIn('hopf: false', text)
        self.assertTrue(text.endswith('status 1\n'))
