# vim: ts=4:sw=4:expandtabs

import json
import logging

from django.conf import settings
from django.utils.translation import gettext_lazy as _

from skewcat.tensor import GenSpace, Morphism, TensorException, TensorWord, parse_scalar

from .FixtureError import FixtureError

logger = logging.getLogger(__name__)

_MISSING = object()


class FixtureReader(object):
    """
    A cursor over parsed fixture JSON that remembers where it is, so every complaint names
    the JSON path it is about.
    """
    def __init__(self, data, path='$'):
        self.data = data
        self.path = path

    @classmethod
    def from_file(cls, filename):
        try:
            with open(filename, encoding='utf-8') as handle:
                data = json.load(handle)
        except OSError as e:
            raise FixtureError(_('cannot read {filename}: {error}').format(filename=filename, error=e.strerror))
        except json.JSONDecodeError as e:
            msg = _('not valid JSON (line {line}, column {column}): {error}')
            raise FixtureError(msg.format(line=e.lineno, column=e.colno, error=e.msg))
        reader = cls(data)
        reader.require_schema()
        return reader

    @classmethod
    def from_json(cls, data):
        reader = cls(data)
        reader.require_schema()
        return reader

    def error(self, msg, key=None):
        return FixtureError(msg, self._at(key) if key is not None else self.path)

    def _at(self, key):
        if isinstance(key, int):
            return '{0}[{1}]'.format(self.path, key)
        return '{0}.{1}'.format(self.path, key)

    def _expect(self, kind, label):
        if not isinstance(self.data, kind):
            raise self.error(_('expected {label}').format(label=label))

    def has(self, key):
        return isinstance(self.data, dict) and key in self.data

    def child(self, key):
        if isinstance(key, int):
            self._expect(list, _('a list'))
            if key >= len(self.data):
                raise self.error(_('missing entry'), key)
        else:
            self._expect(dict, _('an object'))
            if key not in self.data:
                raise self.error(_('missing required key'), key)
        return FixtureReader(self.data[key], self._at(key))

    def get(self, key, kind=None, default=_MISSING):
        if default is not _MISSING and not self.has(key):
            return default
        value = self.child(key)
        if kind is not None and (not isinstance(value.data, kind) or isinstance(value.data, bool)):
            raise value.error(_('has the wrong type'))
        return value.data

    def children(self):
        """
        (key, reader) pairs of an object, or (index, reader) pairs of a list.
        """
        if isinstance(self.data, dict):
            return [(key, self.child(key)) for key in self.data]
        self._expect(list, _('an object or a list'))
        return [(i, self.child(i)) for i in range(len(self.data))]

    # ---------------------------------------------------------------- schema

    def require_schema(self):
        version = self.get('schema', int)
        if version != settings.SKEWCAT_SCHEMA_VERSION:
            msg = _('schema version {version} is not supported (expected {expected})')
            raise self.error(msg.format(version=version, expected=settings.SKEWCAT_SCHEMA_VERSION), 'schema')

    @property
    def kind(self):
        return self.get('kind', str)

    @property
    def name(self):
        return self.get('name', str, default='')

    def spaces(self):
        spaces = {}
        for name, entry in self.child('spaces').children():
            grading = entry.get('grading', list, default=None)
            try:
                spaces[name] = GenSpace(name, entry.get('dim', int), grading)
            except TensorException as e:
                raise entry.error(e.msg)
        return spaces

    def word(self, key, spaces):
        names = self.get(key, list)
        factors = []
        for i, name in enumerate(names):
            if name not in spaces:
                raise self.child(key).error(_('unknown space {name!r}').format(name=name), i)
            factors.append(spaces[name])
        return TensorWord(factors)

    def morphism(self, key, spaces):
        """
        {"dom": [...], "cod": [...], "matrix": [[...], ...]} with entries "p/q" or integers.
        """
        entry = self.child(key)
        dom, cod = entry.word('dom', spaces), entry.word('cod', spaces)
        matrix = entry.child('matrix')
        rows = matrix.get_rows(cod.dim, dom.dim)
        return Morphism.from_rows(dom, cod, rows)

    def get_rows(self, height, width):
        self._expect(list, _('a list of rows'))
        if len(self.data) != height:
            raise self.error(_('expected {height} rows, got {got}').format(height=height, got=len(self.data)))
        rows = []
        for i, row in self.children():
            row._expect(list, _('a row'))
            if len(row.data) != width:
                raise row.error(_('expected {width} entries, got {got}').format(width=width, got=len(row.data)))
            rows.append([row.scalar(j) for j in range(width)])
        return rows

    def scalar(self, key):
        value = self.child(key)
        if isinstance(value.data, bool) or not isinstance(value.data, (int, str)):
            raise value.error(_('expected an integer or a "p/q" string'))
        try:
            return parse_scalar(str(value.data))
        except TensorException as e:
            raise value.error(e.msg)

    def __repr__(self):
        return '<FixtureReader {0}>'.format(self.path)
