"""Exact algebra of squared distance matrices of starlike block graphs."""

from .graph import Shape, parse_shape, squared_distance_matrix, delta22
from .linalg import Inertia, RatPoly
from .spectral import compare_rho, extremal_report, spectral_radius

__all__ = [
    "Shape",
    "parse_shape",
    "squared_distance_matrix",
    "delta22",
    "Inertia",
    "RatPoly",
    "compare_rho",
    "extremal_report",
    "spectral_radius",
]

__version__ = "0.1.0"
