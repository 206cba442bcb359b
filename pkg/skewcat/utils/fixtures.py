# vim: ts=4:sw=4:expandtabs
"""
Readers for the fixture kinds. A fixture is a JSON object

    {"schema": 1, "kind": ..., "name": ..., "spaces": {"A": {"dim": 2}}, ...}

whose matrices use the Morphism JSON format {"dom": [...], "cod": [...], "matrix": [[...]]}.
"""

from django.utils.translation import gettext_lazy as _

from skewcat.comod import FinCoalgebra, QuantumCategory
from skewcat.fusion import Bimonoid, FusionOperator, Tricocycloid
from skewcat.span import FinCategory

BIMONOID = 'bimonoid'
TRICOCYCLOID = 'tricocycloid'
FUSION = 'fusion'
DUALITY = 'duality'
CATEGORY = 'category'
QUANTUM = 'quantum'

FIXTURE_KINDS = (BIMONOID, TRICOCYCLOID, FUSION, DUALITY, CATEGORY, QUANTUM)


def _space(reader, spaces, key='space'):
    name = reader.get(key, str)
    if name not in spaces:
        raise reader.error(_('unknown space {name!r}').format(name=name), key)
    return spaces[name]


def read_bimonoid(reader):
    spaces = reader.spaces()
    maps = reader.child('maps')
    return Bimonoid(
        _space(reader, spaces),
        mul=maps.morphism('mul', spaces),
        unit=maps.morphism('unit', spaces),
        comul=maps.morphism('comul', spaces),
        counit=maps.morphism('counit', spaces),
        name=reader.name,
    )


def read_tricocycloid(reader):
    spaces = reader.spaces()
    maps = reader.child('maps')
    eta = maps.morphism('eta', spaces) if maps.has('eta') else None
    eps = maps.morphism('eps', spaces) if maps.has('eps') else None
    return Tricocycloid(_space(reader, spaces), maps.morphism('v', spaces), eta, eps, name=reader.name)


def read_fusion(reader):
    spaces = reader.spaces()
    return FusionOperator(_space(reader, spaces), reader.child('maps').morphism('V', spaces), name=reader.name)


def read_duality(reader):
    """
    (K, R, η: I -> R⊗K, ε: K⊗R -> I).
    """
    spaces = reader.spaces()
    maps = reader.child('maps')
    return (_space(reader, spaces, 'K'), _space(reader, spaces, 'R'),
            maps.morphism('eta', spaces), maps.morphism('eps', spaces))


def _strings(reader, key):
    values = reader.get(key, list)
    for i, value in enumerate(values):
        if not isinstance(value, str):
            raise reader.child(key).error(_('expected a string'), i)
    return values


def _string_map(reader, key, keys, values):
    mapping = reader.get(key, dict)
    for k, v in mapping.items():
        if k not in keys:
            raise reader.child(key).error(_('unknown element {k!r}').format(k=k), k)
        if v not in values:
            raise reader.child(key).error(_('unknown element {v!r}').format(v=v), k)
    missing = [k for k in keys if k not in mapping]
    if missing:
        raise reader.child(key).error(_('no entry for {k!r}').format(k=missing[0]))
    return mapping


def read_category(reader):
    objects = _strings(reader, 'objects')
    morphisms = _strings(reader, 'morphisms')
    source = _string_map(reader, 'source', morphisms, objects)
    target = _string_map(reader, 'target', morphisms, objects)
    identity = _string_map(reader, 'id', objects, morphisms)

    table = []
    for _position, entry in reader.child('comp').children():
        row = entry.data
        if not isinstance(row, list) or len(row) != 3 or any(m not in morphisms for m in row):
            raise entry.error(_('expected [f, g, f;g] with three known morphisms'))
        table.append(row)
    return FinCategory.from_table(objects, morphisms, source, target, identity, table, name=reader.name)


def read_coalgebra(reader, spaces, name=''):
    return FinCoalgebra(
        _space(reader, spaces), reader.morphism('comul', spaces), reader.morphism('counit', spaces),
        name=name or reader.get('space', str),
    )


def read_quantum(reader):
    """
    The base coalgebra defaults to I when "base" is absent.
    """
    spaces = reader.spaces()
    base = read_coalgebra(reader.child('base'), spaces) if reader.has('base') else FinCoalgebra.unit()
    A = read_coalgebra(reader.child('A'), spaces)
    maps = reader.child('maps')
    return QuantumCategory(
        base, A,
        source=maps.morphism('source', spaces),
        target=maps.morphism('target', spaces),
        mul=maps.morphism('phi2', spaces),
        unit=maps.morphism('phi0', spaces),
        name=reader.name,
    )


READERS = {
    BIMONOID: read_bimonoid,
    TRICOCYCLOID: read_tricocycloid,
    FUSION: read_fusion,
    DUALITY: read_duality,
    CATEGORY: read_category,
    QUANTUM: read_quantum,
}


def read_fixture(reader):
    """
    Return (fixture kind, parsed structure).
    """
    kind = reader.kind
    if kind not in READERS:
        raise reader.error(_('unknown fixture kind {kind!r}').format(kind=kind), 'kind')
    return kind, READERS[kind](reader)
