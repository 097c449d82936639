"""Marked polytopes of two-generator one-relator presentations."""

from .arcs import Arc, ArcSet, Direction
from .bns import exists_non_sigma, fg_kernel_certificate, in_sigma, sigma_arcs
from .errors import RelpolyError
from .geometry import MarkedPolytope, minkowski_diff, minkowski_sum, thickness
from .groupring import FreeRingElement, abelian_support, fox_derivative
from .pipeline import (
    Presentation,
    analyze,
    b1_one_polytope,
    compute,
    marked_polytope,
    polytope_via_fox,
    polytope_via_walk,
    simple_form,
)
from .splitting import hnn_splitting, splitting_complexity, width_seminorm_table
from .words import Word, parse_word

__all__ = [
    "Arc", "ArcSet", "Direction", "FreeRingElement", "MarkedPolytope", "Presentation",
    "RelpolyError", "Word", "abelian_support", "analyze", "b1_one_polytope", "compute",
    "exists_non_sigma", "fg_kernel_certificate", "fox_derivative", "hnn_splitting",
    "in_sigma", "marked_polytope", "minkowski_diff", "minkowski_sum", "parse_word",
    "polytope_via_fox", "polytope_via_walk", "sigma_arcs", "simple_form",
    "splitting_complexity", "thickness", "width_seminorm_table",
]
