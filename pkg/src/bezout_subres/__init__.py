"""Bezout subresultants of univariate polynomials in general (monic, degree-graded) bases."""
from .basis import (
    GeneralBasis,
    PolyInBasis,
    basis_matrix,
    from_power,
    make_custom_basis,
    make_newton_basis,
    make_power_basis,
    to_power,
    transition_matrix,
)
from .bezout import (
    BezoutMatrix,
    TruncatedBezout,
    bezout_matrix_general,
    bezout_matrix_power,
    cayley_numerator,
    cayley_quotient,
    truncate_rows,
)
from .detp import det_exact, det_gauss, det_polymatrix, detp_general, x_block
from .errors import SubresError
from .poly import Poly, as_rational, gcd
from .subres import (
    SubresultantChain,
    bezout_subresultant,
    coefficient_c_omega,
    gcd_via_subresultants,
    root_based_subresultant,
    subresultant_chain,
    sylvester_subresultant,
)

__version__ = "0.1.0"

__all__ = [
    "BezoutMatrix",
    "GeneralBasis",
    "Poly",
    "PolyInBasis",
    "SubresError",
    "SubresultantChain",
    "TruncatedBezout",
    "as_rational",
    "basis_matrix",
    "bezout_matrix_general",
    "bezout_matrix_power",
    "bezout_subresultant",
    "cayley_numerator",
    "cayley_quotient",
    "coefficient_c_omega",
    "det_exact",
    "det_gauss",
    "det_polymatrix",
    "detp_general",
    "from_power",
    "gcd",
    "gcd_via_subresultants",
    "make_custom_basis",
    "make_newton_basis",
    "make_power_basis",
    "root_based_subresultant",
    "subresultant_chain",
    "sylvester_subresultant",
    "to_power",
    "transition_matrix",
    "truncate_rows",
    "x_block",
]
