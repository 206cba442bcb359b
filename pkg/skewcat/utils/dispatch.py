# vim: ts=4:sw=4:expandtabs
"""
The batch front end: turn a CheckRequest into a RunReport.

A fixture holds base data (a bimonoid, a tricocycloid, a fusion operator, a duality, a
category or a quantum category). The requested kind says which structure to look at,
and SUBJECTS knows how to build each kind from each fixture kind.
"""

import logging
import random
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

from django.conf import settings
from django.utils.translation import gettext_lazy as _

from skewcat.comod import (
    ComodException, quantum_from_bimonoid, quantum_from_category, quantum_roundtrip, quantum_to_skew,
    skew_roundtrip,
)
from skewcat.fusion import (
    FusionException, bimonoid_to_tricocycloid, check_fusion_operator, check_tricocycloid, fusion_to_tricocycloid,
    is_hopf_via_fusion, skew_from_tricocycloid, tricocycloid_to_bimonoid, tricocycloid_to_fusion,
)
from skewcat.fusion.corpus import bimonoids
from skewcat.skew import AxiomReport, SkewException
from skewcat.span import (
    NotACategory, SpanException, category_to_monad_in_span, category_to_skew_monoidale, check_monad_in_span,
    skew_monoidale_to_category,
)
from skewcat.span.corpus import random_category
from skewcat.tensor import Morphism, TensorException
from skewcat.warping import (
    WarpingException, monad_from_bimonoid, opmonoidal_monad_from_warping, warp_skew_structure,
    warping_from_duality, warping_from_opmonoidal_monad, warping_from_tricocycloid,
)

from .FixtureError import FixtureError
from .FixtureReader import FixtureReader
from .RunReport import EXIT_MALFORMED, EXIT_PRECONDITION, RunReport
from .fixtures import BIMONOID, CATEGORY, DUALITY, FUSION, QUANTUM, TRICOCYCLOID, read_fixture

logger = logging.getLogger(__name__)

VALIDATE = 'validate'
DERIVE = 'derive'
ROUNDTRIP = 'roundtrip'
CLASSIFY = 'classify'
REPORT = 'report'
FUZZ = 'fuzz'

COMMANDS = (VALIDATE, DERIVE, ROUNDTRIP, CLASSIFY, REPORT, FUZZ)

WARPING = 'warping'
OPMONOIDAL_MONAD = 'opmonoidal-monad'
SKEW = 'skew'

KINDS = (BIMONOID, TRICOCYCLOID, FUSION, WARPING, OPMONOIDAL_MONAD, SKEW, CATEGORY, QUANTUM)

CheckRequest = namedtuple('CheckRequest', 'command kind path output_format seed count')


def _identity(x):
    return x


def _warped(w):
    structure, _witness = warp_skew_structure(w)
    return structure


# (requested kind, fixture kind) -> builder
SUBJECTS = {
    (BIMONOID, BIMONOID): _identity,
    (BIMONOID, TRICOCYCLOID): tricocycloid_to_bimonoid,
    (TRICOCYCLOID, TRICOCYCLOID): _identity,
    (TRICOCYCLOID, BIMONOID): bimonoid_to_tricocycloid,
    (TRICOCYCLOID, FUSION): fusion_to_tricocycloid,
    (FUSION, FUSION): _identity,
    (FUSION, TRICOCYCLOID): tricocycloid_to_fusion,
    (FUSION, BIMONOID): lambda b: tricocycloid_to_fusion(bimonoid_to_tricocycloid(b)),
    (WARPING, TRICOCYCLOID): warping_from_tricocycloid,
    (WARPING, BIMONOID): lambda b: warping_from_opmonoidal_monad(monad_from_bimonoid(b)),
    (WARPING, DUALITY): lambda d: warping_from_duality(*d),
    (OPMONOIDAL_MONAD, BIMONOID): monad_from_bimonoid,
    (SKEW, TRICOCYCLOID): skew_from_tricocycloid,
    (SKEW, BIMONOID): lambda b: skew_from_tricocycloid(bimonoid_to_tricocycloid(b)),
    (SKEW, DUALITY): lambda d: _warped(warping_from_duality(*d)),
    (SKEW, CATEGORY): category_to_skew_monoidale,
    (SKEW, QUANTUM): quantum_to_skew,
    (CATEGORY, CATEGORY): _identity,
    (QUANTUM, QUANTUM): _identity,
    (QUANTUM, BIMONOID): quantum_from_bimonoid,
    (QUANTUM, CATEGORY): quantum_from_category,
}


# ---------------------------------------------------------------- validate

def _category_checks(c):
    checks = {'category': c.check()}
    try:
        checks['monad'] = check_monad_in_span(category_to_monad_in_span(c, validate=False))
        checks['skew'] = category_to_skew_monoidale(c, validate=False).check()
    except NotACategory:
        # composition is not even well typed; the category report says where
        pass
    return checks


def _quantum_checks(q):
    q.check_structure()
    return {'quantum': q.check()}


VALIDATORS = {
    BIMONOID: lambda b: {'bimonoid': b.check()},
    TRICOCYCLOID: lambda t: {'tricocycloid': check_tricocycloid(t)},
    FUSION: lambda f: {'fusion': check_fusion_operator(f)},
    WARPING: lambda w: {'warping': w.check()},
    OPMONOIDAL_MONAD: lambda m: {'opmonoidal-monad': m.check()},
    SKEW: lambda s: {'skew': s.check()},
    CATEGORY: _category_checks,
    QUANTUM: _quantum_checks,
}


# ---------------------------------------------------------------- derive

def _maps(**maps):
    return {name: f.to_json() for name, f in maps.items() if f is not None}


DESCRIPTIONS = {
    BIMONOID: lambda b: {'maps': _maps(mul=b.mul, unit=b.unit, comul=b.comul, counit=b.counit),
                         'hopf': is_hopf_via_fusion(b)},
    TRICOCYCLOID: lambda t: {'maps': _maps(v=t.v, eta=t.eta, eps=t.eps), 'hopf': t.v.is_invertible()},
    FUSION: lambda f: {'maps': _maps(V=f.V), 'hopf': f.V.is_invertible()},
    WARPING: lambda w: {'T': repr(w.T), 'K': w.K.names, 'v0': w.v0.to_json(), 'hopf': w.is_hopf()},
    OPMONOIDAL_MONAD: lambda m: {'T': repr(m.T), 'psi0': m.psi0.to_json()},
    SKEW: lambda s: {'carrier': s.carrier.name, 'classification': s.classify().to_json()},
    CATEGORY: lambda c: c.to_json(),
    QUANTUM: lambda q: {'base': q.base.name, 'maps': _maps(**q.maps())},
}


# ---------------------------------------------------------------- roundtrip

def _compare(subject, law, pairs):
    report = AxiomReport(subject)
    for name, lhs, rhs in pairs:
        report.check_equal(name, law, lhs, rhs)
    return report


def _bimonoid_roundtrip(b):
    back = tricocycloid_to_bimonoid(bimonoid_to_tricocycloid(b))
    return _compare(b.name, 'b -> v -> b', [
        ('mul', back.mul, b.mul), ('unit', back.unit, b.unit),
        ('comul', back.comul, b.comul), ('counit', back.counit, b.counit),
    ])


def _tricocycloid_roundtrip(t):
    back = bimonoid_to_tricocycloid(tricocycloid_to_bimonoid(t))
    return _compare(t.name, 'v -> b -> v', [('v', back.v, t.v), ('eta', back.eta, t.eta), ('eps', back.eps, t.eps)])


def _fusion_roundtrip(f):
    back = tricocycloid_to_fusion(fusion_to_tricocycloid(f))
    return _compare(f.name, 'V -> v -> V', [('V', back.V, f.V)])


def _warping_roundtrip(w):
    back = warping_from_opmonoidal_monad(opmonoidal_monad_from_warping(w))
    return _compare(w.name, 'warping -> monad -> warping', [('warping', back.same_as(w), True)])


def _monad_roundtrip(m):
    back = opmonoidal_monad_from_warping(warping_from_opmonoidal_monad(m))
    return _compare(m.name, 'monad -> warping -> monad', [('opmonoidal-monad', back.same_as(m), True)])


def _category_roundtrip(c):
    back = skew_monoidale_to_category(category_to_skew_monoidale(c))
    return _compare(c.name, 'category -> skew monoidale -> category', [('category', back.to_json(), c.to_json())])


def _quantum_roundtrip(q):
    _back, iso = quantum_roundtrip(q)
    _skew_back, skew_iso = skew_roundtrip(quantum_to_skew(q))
    return _compare(q.name, 'isomorphic after the roundtrip', [
        ('quantum-skew-quantum', iso is not None, True),
        ('skew-quantum-skew', skew_iso is not None, True),
    ])


ROUNDTRIPS = {
    BIMONOID: _bimonoid_roundtrip,
    TRICOCYCLOID: _tricocycloid_roundtrip,
    FUSION: _fusion_roundtrip,
    WARPING: _warping_roundtrip,
    OPMONOIDAL_MONAD: _monad_roundtrip,
    CATEGORY: _category_roundtrip,
    QUANTUM: _quantum_roundtrip,
}


# ---------------------------------------------------------------- classify

SKEW_VIEWS = {
    SKEW: _identity,
    WARPING: _warped,
    QUANTUM: quantum_to_skew,
    CATEGORY: category_to_skew_monoidale,
    BIMONOID: lambda b: skew_from_tricocycloid(bimonoid_to_tricocycloid(b)),
    TRICOCYCLOID: skew_from_tricocycloid,
}

# command -> kinds it accepts
COMPATIBILITY = {
    VALIDATE: KINDS,
    DERIVE: (BIMONOID, TRICOCYCLOID, FUSION, WARPING, OPMONOIDAL_MONAD, SKEW, QUANTUM),
    ROUNDTRIP: tuple(kind for kind in KINDS if kind in ROUNDTRIPS),
    CLASSIFY: tuple(kind for kind in KINDS if kind in SKEW_VIEWS),
    REPORT: KINDS,
    FUZZ: (CATEGORY, BIMONOID),
}


def is_compatible(command, kind):
    return kind in COMPATIBILITY.get(command, ())


# ---------------------------------------------------------------- running

def _threads():
    return max(1, int(settings.SKEWCAT_THREADS))


def run_tasks(tasks):
    """
    Run named callables that each return a dict of AxiomReports, at most SKEWCAT_THREADS at
    a time, and merge their results by name.
    """
    checks = {}
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        futures = [pool.submit(task) for _name, task in sorted(tasks, key=lambda pair: pair[0])]
        for future in futures:
            checks.update(future.result())
    return checks


def _subject(kind, fixture_kind, structure):
    builder = SUBJECTS.get((kind, fixture_kind))
    if builder is None:
        msg = _('a {fixture} fixture does not determine a {kind}')
        raise SkewException(msg.format(fixture=fixture_kind, kind=kind))
    return builder(structure)


def _plan(command, kind, subject):
    """
    Return (tasks, payload builder) for a command on a subject of the given kind.
    """
    tasks, payload = [], {}
    if command in (VALIDATE, DERIVE, REPORT):
        tasks.append((VALIDATE, lambda: VALIDATORS[kind](subject)))
    if command == DERIVE:
        payload.update(DESCRIPTIONS[kind](subject))
    if command == ROUNDTRIP or (command == REPORT and kind in ROUNDTRIPS):
        tasks.append((ROUNDTRIP, lambda: {'roundtrip': ROUNDTRIPS[kind](subject)}))
    if command == CLASSIFY or (command == REPORT and kind in SKEW_VIEWS):
        structure = SKEW_VIEWS[kind](subject)
        payload['classification'] = structure.classify().to_json()
        # validate already checked these as skew structures
        if command == CLASSIFY or kind not in (SKEW, CATEGORY):
            tasks.append((CLASSIFY, lambda: {'skew': structure.check()}))
    return tasks, payload


def run(request):
    """
    Execute a validated CheckRequest. Malformed input and failed preconditions are reported
    in the RunReport, never raised.
    """
    report = RunReport(request.command, request.kind, request.path or '', request.seed, _threads())
    logger.info('skewcat %s %s %s', request.command, request.kind, request.path)
    if request.command == FUZZ:
        return fuzz(request.kind, request.seed, request.count, report)

    try:
        reader = FixtureReader.from_file(request.path)
        fixture_kind, structure = read_fixture(reader)
        subject = _subject(request.kind, fixture_kind, structure)
        tasks, payload = _plan(request.command, request.kind, subject)
        report.checks.update(run_tasks(tasks))
        report.payload.update(payload)
        report.payload['fixture'] = {'kind': fixture_kind, 'name': reader.name}
    except FixtureError as e:
        return report.fail(EXIT_MALFORMED, 'FixtureError', e.msg, e.path)
    except (TensorException, SkewException, FusionException, WarpingException, SpanException,
            ComodException) as e:
        logger.info('%s: %s', type(e).__name__, e.msg)
        return report.fail(EXIT_PRECONDITION, type(e).__name__, e.msg)
    return report


# ---------------------------------------------------------------- fuzz

def perturb(b, rng):
    """
    b with one entry of μ raised by 1.
    """
    row, col = rng.randrange(b.mul.cod.dim), rng.randrange(b.mul.dom.dim)
    bump = Morphism.from_entries(b.mul.dom, b.mul.cod, {row: {col: 1}})
    name = '{0}[μ({1},{2})+1]'.format(b.name, row, col)
    return type(b)(b.space, b.mul + bump, b.unit, b.comul, b.counit, name=name)


def _fuzz_category(c):
    """
    Every generated category must pass all three encodings.
    """
    checks = _category_checks(c)
    return all(report.passed for report in checks.values()), checks


def _fuzz_bimonoid(b):
    """
    A perturbed bimonoid must fail, and the quantum category over I must fail the same laws.
    """
    laws = b.check()
    quantum = quantum_from_bimonoid(b).check()
    agrees = not laws.passed and laws.failing() == quantum.failing()
    return agrees, {'bimonoid': laws, 'quantum': quantum}


def fuzz(kind, seed, count, report=None):
    report = report or RunReport(FUZZ, kind, '', seed, _threads())
    rng = random.Random(seed)

    if kind == CATEGORY:
        samples = [random_category(rng) for _i in range(count)]
        judge = _fuzz_category
    else:
        corpus = bimonoids()
        samples = [perturb(rng.choice(corpus), rng) for _i in range(count)]
        judge = _fuzz_bimonoid

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        outcomes = list(pool.map(judge, samples))

    summary = AxiomReport('fuzz {0} seed {1}'.format(kind, seed))
    failing = []
    for index, (sample, (expected, checks)) in enumerate(zip(samples, outcomes)):
        label = '{0:03d} {1}'.format(index, sample.name)
        summary.check_equal(label, 'behaves as expected', expected, True)
        if not expected:
            failing.append(label)
            report.checks.update({'{0}: {1}'.format(label, name): r for name, r in checks.items()})

    report.checks['fuzz'] = summary
    report.payload.update(generated=count, expected=count - len(failing), unexpected=failing)
    return report
