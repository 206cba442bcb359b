# vim: ts=4:sw=4:expandtabs

from .Bimonoid import BIMONOID_LAWS, Bimonoid
from .FusionException import FusionException, MissingAugmentation, NotABimonoid, NotATricocycloid
from .FusionOperator import FusionOperator
from .Tricocycloid import Tricocycloid
from .conversions import (
    AUG_COUNIT, AUG_SCALAR, AUG_TRIANGLE, AUG_UNIT, AUGMENTATION_AXIOMS, AUGMENTATION_TO_SKEW, COCYCLE,
    PENTAGON_EQUATION, bimonoid_to_tricocycloid, check_augmentation, check_fusion_operator, check_tricocycloid,
    fusion_to_tricocycloid, is_hopf_via_fusion, is_lax_fusion_operator, is_tricocycloid, skew_from_tricocycloid,
    tricocycloid_to_bimonoid, tricocycloid_to_fusion, validate_bimonoid, validate_tricocycloid,
)
