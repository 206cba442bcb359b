# vim: ts=4:sw=4:expandtabs

import json

from django.test import SimpleTestCase, override_settings

from skewcat.skew import PENTAGON
from skewcat.tests.factories import fixture_path
from skewcat.utils import (
    CATEGORY, CLASSIFY, COMPATIBILITY, DERIVE, EXIT_AXIOM_FAILURE, EXIT_MALFORMED, EXIT_PASS, EXIT_PRECONDITION,
    FUZZ, QUANTUM, REPORT, ROUNDTRIP, SKEW, TRICOCYCLOID, VALIDATE, WARPING, CheckRequest, RunReport, fuzz,
    is_compatible, run,
)


def request(command, kind, name=None, seed=0, count=1):
    return CheckRequest(command, kind, fixture_path(name) if name else None, 'json', seed, count)


class DispatchTestCase(SimpleTestCase):
    """
    Test cases for skewcat.utils.dispatch.
    """
    def test_bimonoid_fixture(self):
        """
        A bimonoid determines every kind but a category.
        """
        for command in (VALIDATE, DERIVE, ROUNDTRIP, CLASSIFY, REPORT):
            for kind in COMPATIBILITY[command]:
                report = run(request(command, kind, 'kZ2.json'))
                expected = EXIT_PRECONDITION if kind == CATEGORY else EXIT_PASS
                self.assertEqual(report.status, expected, (command, kind))

    def test_category_fixture(self):
        for command in (VALIDATE, DERIVE, ROUNDTRIP, CLASSIFY, REPORT):
            for kind in COMPATIBILITY[command]:
                report = run(request(command, kind, 'Z3.json'))
                expected = EXIT_PASS if kind in (SKEW, CATEGORY, QUANTUM) else EXIT_PRECONDITION
                self.assertEqual(report.status, expected, (command, kind))

    def test_broken_category(self):
        report = run(request(VALIDATE, CATEGORY, 'Z3-broken.json'))
        self.assertEqual(report.status, EXIT_AXIOM_FAILURE)
        self.assertEqual(set(report.checks), {'category', 'monad', 'skew'})
        self.assertEqual(report.checks['skew'].failing(), {PENTAGON})
        self.assertEqual(report.payload['fixture'], {'kind': 'category', 'name': 'Z/3[g;g:=e]'})

    def test_malformed_fixture(self):
        report = run(request(VALIDATE, 'bimonoid', 'kZ2-truncated.json'))
        self.assertEqual(report.status, EXIT_MALFORMED)
        self.assertEqual(report.error['type'], 'FixtureError')
        self.assertEqual(report.error['path'], '$.maps.mul.matrix[1]')
        self.assertEqual(report.checks, {})

    def test_missing_fixture(self):
        report = run(request(VALIDATE, 'bimonoid', 'no-such-fixture.json'))
        self.assertEqual(report.status, EXIT_MALFORMED)

    def test_hopf(self):
        report = run(request(DERIVE, TRICOCYCLOID, 'k1e.json'))
        self.assertEqual(report.status, EXIT_PASS)
        self.assertFalse(report.payload['hopf'])
        self.assertTrue(run(request(DERIVE, TRICOCYCLOID, 'kZ2.json')).payload['hopf'])

    def test_classify(self):
        report = run(request(CLASSIFY, SKEW, 'pairing.json'))
        self.assertEqual(report.status, EXIT_PASS)
        self.assertEqual(report.payload['classification'],
                         {'hopf': True, 'left_normal': False, 'right_normal': False})

        report = run(request(CLASSIFY, WARPING, 'H4.json'))
        self.assertEqual(report.payload['classification']['hopf'], True)

    def test_quantum_fixture(self):
        report = run(request(REPORT, QUANTUM, 'chaotic-xy.json'))
        self.assertEqual(report.status, EXIT_PASS)
        self.assertEqual(set(report.checks), {'quantum', 'roundtrip', 'skew'})

    def test_report_is_json(self):
        report = run(request(REPORT, 'bimonoid', 'kZ2.json'))
        data = json.loads(report.dumps())
        self.assertEqual(data['header']['command'], REPORT)
        self.assertEqual(RunReport.from_json(data).dumps(), report.dumps())

    def test_compatibility(self):
        self.assertTrue(is_compatible(FUZZ, CATEGORY))
        self.assertFalse(is_compatible(FUZZ, QUANTUM))
        self.assertFalse(is_compatible(DERIVE, CATEGORY))
        self.assertFalse(is_compatible('explode', CATEGORY))


class FuzzTestCase(SimpleTestCase):
    """
    Test cases for skewcat.utils.fuzz.
    """
    def test_categories(self):
        report = fuzz(CATEGORY, 3, 12)
        self.assertEqual(report.status, EXIT_PASS)
        self.assertEqual(report.payload['generated'], 12)
        self.assertEqual(report.payload['unexpected'], [])
        self.assertEqual(len(report.checks['fuzz']), 12)

    def test_bimonoids(self):
        report = run(request(FUZZ, 'bimonoid', seed=5, count=8))
        self.assertEqual(report.payload['generated'], 8)
        self.assertEqual(report.header['seed'], 5)

    def test_deterministic(self):
        first, second = fuzz('bimonoid', 9, 6), fuzz('bimonoid', 9, 6)
        self.assertEqual(first.dumps(), second.dumps())
        self.assertNotEqual(fuzz(CATEGORY, 1, 6).dumps(), fuzz(CATEGORY, 2, 6).dumps())

    def test_threads(self):
        """
        The thread cap changes the header only.
        """
        serial = fuzz(CATEGORY, 4, 10).to_json()
        with override_settings(SKEWCAT_THREADS=4):
            pooled = fuzz(CATEGORY, 4, 10).to_json()
            report = run(request(VALIDATE, 'bimonoid', 'H4.json'))
        self.assertEqual(pooled['header']['threads'], 4)
        self.assertEqual((pooled['checks'], pooled['payload']), (serial['checks'], serial['payload']))
        self.assertEqual(report.status, EXIT_PASS)
