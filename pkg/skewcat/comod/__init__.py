# vim: ts=4:sw=4:expandtabs

from .Biduality import SNAKE_LAWS, SNAKE_LEFT, SNAKE_RIGHT, Biduality
from .ComodBicat import ComodBicat, left_coaction, target_coaction
from .ComodException import (
    BoundaryMismatch, ComodException, NotAComodule, NotAComoduleMap, NotAComonoid, NotAComonoidMorphism,
    QuantumInvalid, SkewInvalid,
)
from .Comodule import COMODULE_LAWS, Comodule, cotensor, tensor_comodules
from .ComoduleMap import ComoduleMap, find_isomorphism, hom_space
from .FinCoalgebra import FinCoalgebra
from .QuantumCategory import QUANTUM_AXIOMS, QuantumCategory
from .composable import composable_pairs, composable_triples
from .correspondence import (
    chaotic_quantum_category, counit_comodule, quantum_from_bimonoid, quantum_iso, quantum_roundtrip,
    quantum_to_skew, skew_iso, skew_roundtrip, skew_to_quantum, tensor_comodule, unit_comodule,
)
from .duality import (
    MONOIDALE_AXIOMS, Monoidale, associativity_legs, bidual, canonical_monoidale, check_monoidale, monoidale_of,
    transpose_via_biduality,
)
from .linearization import linearize_category_monoidale, linearize_finset, linearize_span, quantum_from_category


def check_quantum_category(q):
    return q.check()
