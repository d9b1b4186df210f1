"""Weak Lefschetz property experiments for Stanley-Reisner rings and stellar subdivisions."""

from .algebra import GradedIdeal, HomogPoly, PolyRing, ideal_quotient, stanley_reisner_ideal
from .complexes import (
    SimplicialComplex,
    cross_polytope_boundary,
    cyclic_polytope_boundary,
    join,
    simplex,
    simplex_boundary,
)
from .errors import LabError
from .homology import is_gorenstein_star, reduced_homology
from .lefschetz import (
    ArtinianAlgebra,
    LefschetzVerdict,
    artinian_reduction,
    has_slp,
    has_wlp,
    has_wlp_gorenstein_shortcut,
    m_property,
    multiplication_map_rank,
)
from .sequences import IntSeq, delta, delta_plus, gamma
from .stellar import StellarInstance, build_artinian_seed, build_instance, build_section5, run_checks

__version__ = "0.1.0"

__all__ = [
    "ArtinianAlgebra", "GradedIdeal", "HomogPoly", "IntSeq", "LabError", "LefschetzVerdict", "PolyRing",
    "SimplicialComplex", "StellarInstance", "artinian_reduction", "build_artinian_seed", "build_instance",
    "build_section5", "cross_polytope_boundary", "cyclic_polytope_boundary", "delta", "delta_plus", "gamma",
    "has_slp", "has_wlp", "has_wlp_gorenstein_shortcut", "ideal_quotient", "is_gorenstein_star", "join",
    "m_property", "multiplication_map_rank", "reduced_homology", "run_checks", "simplex", "simplex_boundary",
    "stanley_reisner_ideal",
]
