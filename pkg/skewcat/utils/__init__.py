# vim: ts=4:sw=4:expandtabs

from .FixtureError import FixtureError
from .FixtureReader import FixtureReader
from .RunReport import EXIT_AXIOM_FAILURE, EXIT_MALFORMED, EXIT_PASS, EXIT_PRECONDITION, RunReport
from .dispatch import (
    CLASSIFY, COMMANDS, COMPATIBILITY, DERIVE, FUZZ, KINDS, OPMONOIDAL_MONAD, REPORT, ROUNDTRIP, SKEW, VALIDATE,
    WARPING, CheckRequest, fuzz, is_compatible, perturb, run, run_tasks,
)
from .fixtures import (
    BIMONOID, CATEGORY, DUALITY, FIXTURE_KINDS, FUSION, QUANTUM, TRICOCYCLOID, read_fixture,
)
