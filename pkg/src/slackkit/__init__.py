"""Slack ideals of polytopes and their toric counterparts.

The main entry points are re-exported here; see the submodules for the
full APIs.
"""

from .budget import Budget, BudgetExceeded
from .exactnum import ALPHA1, ALPHA2, IntegerLattice, QuadExt
from .groebner import (
    Ideal,
    LatticeIdeal,
    classify_ideal,
    ideal_containment,
    krull_dimension,
    minimal_generator_count,
    saturate,
)
from .kernels import IMPLEMENTATION as KERNELS
from .poly import Polynomial, TermOrder, parse_polynomial
from .polytope import GaleDiagram, SlackPattern, VRep, construct_catalog, facet_enumeration, pattern_of
from .slackcore import (
    certify_projective_uniqueness,
    is_morally_2_level,
    slack_ideal,
    toric_ideal_TP,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA1",
    "ALPHA2",
    "Budget",
    "BudgetExceeded",
    "GaleDiagram",
    "Ideal",
    "IntegerLattice",
    "KERNELS",
    "LatticeIdeal",
    "Polynomial",
    "QuadExt",
    "SlackPattern",
    "TermOrder",
    "VRep",
    "certify_projective_uniqueness",
    "classify_ideal",
    "construct_catalog",
    "facet_enumeration",
    "ideal_containment",
    "is_morally_2_level",
    "krull_dimension",
    "minimal_generator_count",
    "parse_polynomial",
    "pattern_of",
    "saturate",
    "slack_ideal",
    "toric_ideal_TP",
    "verify_certificate",
]
