# vim: ts=4:sw=4:expandtabs

import logging

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'


def _jsonable(value):
    if value is None:
        return None
    if hasattr(value, 'to_json'):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (str, int, float, bool, dict)):
        return value
    return str(value)


class AxiomResult(object):
    """
    The outcome of one law: pass, or fail with the first counterexample tuple and both
    evaluated sides for diffing.
    """
    __slots__ = ('axiom', 'status', 'law', 'witness', 'lhs', 'rhs')

    def __init__(self, axiom, status, law='', witness=None, lhs=None, rhs=None):
        self.axiom = axiom
        self.status = status
        self.law = law
        self.witness = _jsonable(witness)
        self.lhs = _jsonable(lhs)
        self.rhs = _jsonable(rhs)

    @property
    def passed(self):
        return self.status == PASS

    def to_json(self):
        data = {'axiom': self.axiom, 'status': self.status, 'law': self.law}
        if not self.passed:
            data.update(witness=self.witness, lhs=self.lhs, rhs=self.rhs)
        return data

    @classmethod
    def from_json(cls, data):
        return cls(data['axiom'], data['status'], data.get('law', ''),
                   data.get('witness'), data.get('lhs'), data.get('rhs'))

    def __repr__(self):
        return '<{0}: {1}>'.format(self.axiom, self.status)


class AxiomReport(object):
    """
    An ordered collection of AxiomResults for one subject.
    """
    def __init__(self, subject='', results=None):
        self.subject = subject
        self.results = list(results or ())

    def check(self, axiom, law, cases, evaluate, equal=None):
        """
        Evaluate `evaluate(*case)` -> (lhs, rhs) for every case tuple, stopping at the first case
        where the sides differ.
        """
        equal = equal or (lambda a, b: a == b)
        for case in cases:
            lhs, rhs = evaluate(*case)
            if not equal(lhs, rhs):
                logger.info('%s fails %s at %r', self.subject, axiom, case)
                return self.add(AxiomResult(axiom, FAIL, law, [repr(c) for c in case], lhs, rhs))
        return self.add(AxiomResult(axiom, PASS, law))

    def check_equal(self, axiom, law, lhs, rhs, equal=None):
        return self.check(axiom, law, [()], lambda: (lhs, rhs), equal)

    def add(self, result):
        self.results.append(result)
        return result

    def extend(self, other):
        self.results.extend(other.results)
        return self

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def failing(self):
        return {r.axiom for r in self.results if not r.passed}

    def names(self):
        return [r.axiom for r in self.results]

    def __getitem__(self, axiom):
        for result in self.results:
            if result.axiom == axiom:
                return result
        raise KeyError(axiom)

    def __iter__(self):
        return iter(self.results)

    def __len__(self):
        return len(self.results)

    def to_json(self):
        return {'subject': self.subject, 'axioms': [r.to_json() for r in self.results]}

    @classmethod
    def from_json(cls, data):
        return cls(data.get('subject', ''), [AxiomResult.from_json(r) for r in data['axioms']])

    def __repr__(self):
        return '<AxiomReport {0}: {1}>'.format(self.subject, ', '.join(map(repr, self.results)))
