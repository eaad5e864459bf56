"""Finite groupoids and inverse semigroups given by (partial) Cayley tables."""

from .axioms import (
    CheckResult,
    Classification,
    PreconditionError,
    Witness,
    WitnessKind,
    check_groupoid_axioms,
    check_vagner,
    classify,
)
from .bridge import FiniteGroupoid, FiniteInverseSemigroup, g_of_s, roundtrip_g, roundtrip_s, s_of_g
from .tables import (
    DesignatedElements,
    FiniteMagma,
    FinitePartialMagma,
    ParseError,
    parse_structure,
    product,
    serialize_structure,
)

__version__ = "0.1.0"
