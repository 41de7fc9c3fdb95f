"""SU(3) Bloch-vector toolkit for qutrit states.

Gell-Mann algebra with exact structure-constant tables, star/wedge products
on real 8-vectors, closed-form pure/mixed-state tests, density-matrix
conversions, the adjoint SO(8) action with Haar orbit sampling, and the
diagonal-state eigenvalue triangle with entropy-of-mixing contours.
"""

from .adjoint import (
    adjoint_su2,
    adjoint_su3,
    haar_random_su2,
    haar_random_su3,
    orbit_sample,
)
from .bloch import (
    DEFAULT_TOL,
    ValidationError,
    as_bloch_vector,
    dot,
    geodesic_distance,
    is_mixed_state,
    is_pure,
    star,
    state_constraints,
    wedge,
)
from .density import (
    bloch_matrix,
    char_poly_coeffs,
    eigvals_hermitian_3x3,
    entropy_of_mixing,
    from_bloch,
    mixing_entropy,
    spectrum,
    to_bloch,
    validate_density,
)
from .gellmann import SQRT3, basis, d_symbol, d_tensor, f_symbol, f_tensor, gell_mann, product_expansion
from .triangle import (
    EDGE_MIDPOINTS,
    ORIGIN,
    VERTICES,
    DiagPoint,
    EntropyGrid,
    bloch_from_diag,
    diag_constraints,
    diag_eigenvalues,
    diag_entropy,
    entropy_grid,
    equi_entropy_contour,
    in_triangle,
    named_points,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "SQRT3",
    "DiagPoint",
    "EDGE_MIDPOINTS",
    "EntropyGrid",
    "ORIGIN",
    "VERTICES",
    "ValidationError",
    "adjoint_su2",
    "adjoint_su3",
    "as_bloch_vector",
    "basis",
    "bloch_from_diag",
    "bloch_matrix",
    "char_poly_coeffs",
    "d_symbol",
    "d_tensor",
    "diag_constraints",
    "diag_eigenvalues",
    "diag_entropy",
    "dot",
    "eigvals_hermitian_3x3",
    "entropy_grid",
    "entropy_of_mixing",
    "equi_entropy_contour",
    "f_symbol",
    "f_tensor",
    "from_bloch",
    "geodesic_distance",
    "gell_mann",
    "haar_random_su2",
    "haar_random_su3",
    "in_triangle",
    "is_mixed_state",
    "is_pure",
    "mixing_entropy",
    "named_points",
    "orbit_sample",
    "product_expansion",
    "spectrum",
    "star",
    "state_constraints",
    "to_bloch",
    "validate_density",
    "wedge",
]
