# vim: ts=4:sw=4:expandtabs

import os
import tempfile

from django.test import SimpleTestCase, override_settings

from skewcat.fusion import Bimonoid
from skewcat.span import FinCategory
from skewcat.tensor import parse_scalar
from skewcat.tests.factories import fixture_path
from skewcat.utils import BIMONOID, CATEGORY, DUALITY, QUANTUM, FixtureError, FixtureReader, read_fixture


def bimonoid_data(**updates):
    data = {
        'schema': 1,
        'kind': 'bimonoid',
        'name': 'k',
        'spaces': {'A': {'dim': 1}},
        'space': 'A',
        'maps': {
            'mul': {'dom': ['A', 'A'], 'cod': ['A'], 'matrix': [[1]]},
            'unit': {'dom': [], 'cod': ['A'], 'matrix': [[1]]},
            'comul': {'dom': ['A'], 'cod': ['A', 'A'], 'matrix': [[1]]},
            'counit': {'dom': ['A'], 'cod': [], 'matrix': [[1]]},
        },
    }
    data.update(updates)
    return data


class FixtureReaderTestCase(SimpleTestCase):
    """
    Test cases for skewcat.utils.FixtureReader and the fixture readers.
    """
    def read(self, data):
        return read_fixture(FixtureReader.from_json(data))

    def assertFixtureError(self, data, path):
        with self.assertRaises(FixtureError) as cm:
            self.read(data)
        self.assertEqual(cm.exception.path, path)

    def test_fixtures(self):
        test_cases = [
            ('kZ2.json', BIMONOID),
            ('H4.json', BIMONOID),
            ('Z3.json', CATEGORY),
            ('pairing.json', DUALITY),
            ('chaotic-xy.json', QUANTUM),
        ]
        for name, kind in test_cases:
            fixture_kind, _structure = read_fixture(FixtureReader.from_file(fixture_path(name)))
            self.assertEqual(fixture_kind, kind, name)

    def test_bimonoid(self):
        kind, b = read_fixture(FixtureReader.from_file(fixture_path('kZ2.json')))
        self.assertIsInstance(b, Bimonoid)
        self.assertEqual(b.mul.shape, (2, 4))
        self.assertTrue(b.check().passed)

    def test_category(self):
        _kind, c = read_fixture(FixtureReader.from_file(fixture_path('Z3-broken.json')))
        self.assertIsInstance(c, FinCategory)
        self.assertEqual(c.name, 'Z/3[g;g:=e]')
        self.assertEqual(c.compose('g', 'g'), 'e')

    def test_minimal(self):
        kind, b = self.read(bimonoid_data())
        self.assertEqual(kind, BIMONOID)
        self.assertEqual(b.name, 'k')
        self.assertTrue(b.check().passed)

    def test_truncated_row(self):
        with self.assertRaises(FixtureError) as cm:
            read_fixture(FixtureReader.from_file(fixture_path('kZ2-truncated.json')))
        self.assertEqual(cm.exception.path, '$.maps.mul.matrix[1]')

    def test_schema(self):
        self.assertFixtureError(bimonoid_data(schema=2), '$.schema')
        self.assertFixtureError(bimonoid_data(schema='1'), '$.schema')

        data = bimonoid_data()
        del data['schema']
        self.assertFixtureError(data, '$.schema')

    @override_settings(SKEWCAT_SCHEMA_VERSION=2)
    def test_schema_follows_settings(self):
        self.assertFixtureError(bimonoid_data(), '$.schema')
        kind, _b = self.read(bimonoid_data(schema=2))
        self.assertEqual(kind, BIMONOID)

    def test_kind(self):
        self.assertFixtureError(bimonoid_data(kind='monad'), '$.kind')
        self.assertFixtureError(bimonoid_data(kind=3), '$.kind')

    def test_spaces(self):
        self.assertFixtureError(bimonoid_data(space='B'), '$.space')
        self.assertFixtureError(bimonoid_data(spaces={'A': {'dim': 'one'}}), '$.spaces.A.dim')

        data = bimonoid_data()
        data['maps']['unit']['cod'] = ['B']
        self.assertFixtureError(data, '$.maps.unit.cod[0]')

    def test_matrices(self):
        test_cases = [
            ([[1.5]], '$.maps.mul.matrix[0][0]'),
            ([['x']], '$.maps.mul.matrix[0][0]'),
            ([['1/0']], '$.maps.mul.matrix[0][0]'),
            ([[True]], '$.maps.mul.matrix[0][0]'),
            ([[1, 0]], '$.maps.mul.matrix[0]'),
            ([[1], [0]], '$.maps.mul.matrix'),
            ([1], '$.maps.mul.matrix[0]'),
        ]
        for matrix, path in test_cases:
            data = bimonoid_data()
            data['maps']['mul']['matrix'] = matrix
            self.assertFixtureError(data, path)

    def test_fractions(self):
        data = bimonoid_data()
        data['maps']['mul']['matrix'] = [['2/4']]
        _kind, b = self.read(data)
        self.assertEqual(b.mul.rows()[0][0], parse_scalar('1/2'))
        self.assertFalse(b.check().passed)

    def test_missing_map(self):
        data = bimonoid_data()
        del data['maps']['comul']
        self.assertFixtureError(data, '$.maps.comul')

    def test_files(self):
        with self.assertRaises(FixtureError):
            FixtureReader.from_file(fixture_path('no-such-fixture.json'))

        with tempfile.TemporaryDirectory() as directory:
            filename = os.path.join(directory, 'broken.json')
            with open(filename, 'w', encoding='utf-8') as handle:
                handle.write('{"schema": 1,')
            with self.assertRaises(FixtureError) as cm:
                FixtureReader.from_file(filename)
        self.assertEqual(cm.exception.path, '$')
