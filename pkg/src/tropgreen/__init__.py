"""Exact tropical matrix algebra: Green's relations, duality and ranks."""

from .core import NEG_INF, POS_INF, Flavor, TropicalError, parse_scalar, t_add, t_mul, t_neg
from .linalg import (
    TropMatrix,
    TropVector,
    left_residual,
    mat_mul,
    proj_equal,
    projectivize,
    right_residual,
    scalar_product,
)

__version__ = "0.1.0"
