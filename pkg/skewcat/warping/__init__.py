# vim: ts=4:sw=4:expandtabs

from .NaturalFamily import PATTERNS, NaturalFamily
from .OpmonoidalFunctorWitness import OPMONOIDAL_AXIOMS, OpmonoidalFunctorWitness
from .OpmonoidalMonad import OpmonoidalMonad
from .SkewLeftWarping import (
    WARP_ASSOC, WARP_UNIT_ASSOC, WARP_UNIT_LEFT, WARP_UNIT_RIGHT, WARP_UNIT_UNIT, WARPING_AXIOMS,
    SkewLeftWarping,
)
from .TensorialEndofunctor import TensorialEndofunctor
from .WarpingException import (
    KNotUnit, NotADuality, NotAnOpmonoidalMonad, NotRightNormal, WarpingException, WarpingInvalid,
)
from .constructions import (
    check_duality, check_warping_axioms, identity_monad, left_and_right_from_opmonoidal,
    monad_from_bimonoid, opmonoidal_monad_from_warping, reversed_monad, trivial_warping,
    validate_monad, warp_skew_structure, warping_from_duality, warping_from_opmonoidal_monad,
    warping_from_tricocycloid,
)
