"""xformlab: exact decisions and certificates for X-form similarity.

An X-form matrix is square with all entries off the diagonal and the
anti-diagonal equal to zero; a matrix is X-formable when it is similar to
one.  This package decides X-formability over the real, complex, and F_p
views by exact arithmetic, constructs explicit similarity certificates,
produces density/interior/boundary witnesses for the topology of the
X-formable set, and factors any matrix over F_3 into two X-formable
factors.  Every result ships with exactly re-checkable data.
"""

from .exactnum import GF, QQ, Rational, fp_inverse, rational_arith, rational_reconstruct
from .kernels import BACKEND
from .matrixcore import (
    Matrix,
    charpoly,
    conjugate,
    inf_norm,
    is_x_shape,
    mat_arith,
    mat_inverse,
    minpoly,
    nullspace,
)
from .upoly import (
    Polynomial,
    PropertyPReport,
    fp_factor,
    fp_squarefree,
    poly_divrem,
    poly_gcd,
    quadratic_split,
    rational_roots,
    sturm_count,
    verifies_property_p,
    yun_squarefree,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "GF",
    "Matrix",
    "Polynomial",
    "PropertyPReport",
    "QQ",
    "Rational",
    "charpoly",
    "conjugate",
    "fp_factor",
    "fp_inverse",
    "fp_squarefree",
    "inf_norm",
    "is_x_shape",
    "mat_arith",
    "mat_inverse",
    "minpoly",
    "nullspace",
    "poly_divrem",
    "poly_gcd",
    "quadratic_split",
    "rational_arith",
    "rational_reconstruct",
    "rational_roots",
    "sturm_count",
    "verifies_property_p",
    "yun_squarefree",
]
