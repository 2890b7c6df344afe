"""Exact computational toolkit for cyclic quotient surface singularities and
the anticanonical log del Pezzo hypersurface series: continued fractions,
McKay quivers, adjoint images of simple sheaves with an independent toric
oracle, degree-two del Pezzo lattice combinatorics, the intersection theory
of the minimal resolutions, and their exceptional collections."""

from .cyclic import CyclicType, ValidationError, hj_expand, h_series, i_series, inverse_weight, j_series
from .mckay import mckay_quiver, simple_ext_dims, special_weights
from .resolution import fundamental_cycle, psi_simple, psi_toric_oracle

__all__ = [
    "CyclicType",
    "ValidationError",
    "hj_expand",
    "i_series",
    "j_series",
    "h_series",
    "inverse_weight",
    "special_weights",
    "simple_ext_dims",
    "mckay_quiver",
    "fundamental_cycle",
    "psi_simple",
    "psi_toric_oracle",
]
