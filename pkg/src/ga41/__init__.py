"""Computational kernel for the real Clifford algebra of signature (-++++).

The package exposes the 32-dimensional multivector arithmetic, the
isomorphism onto complex 4x4 matrices, monogenic plane waves and
polynomials, the momentum-space eigensystem machinery, idempotent
projector quadruples with their SU(4) generator relations, reciprocal
frames with gauge transformations, and a command line verification
harness over all of it.
"""

__version__ = "0.1.0"

from .algebra import (
    Multivector,
    ONE,
    PSEUDOSCALAR,
    blade_grade,
    blade_name,
    blade_product,
    commutator,
    e,
    e_upper,
    geometric_product,
    grade_part,
    inner,
    mv_exp,
    norm,
    outer,
    parse_multivector,
    reverse,
    rotate,
    scalar_product,
)
from .matrices import from_matrix, to_matrix
from .monogenic import MomentumVector, MultivectorField, plane_wave

__all__ = [
    "MomentumVector",
    "MultivectorField",
    "from_matrix",
    "plane_wave",
    "to_matrix",
    "Multivector",
    "ONE",
    "PSEUDOSCALAR",
    "blade_grade",
    "blade_name",
    "blade_product",
    "commutator",
    "e",
    "e_upper",
    "geometric_product",
    "grade_part",
    "inner",
    "mv_exp",
    "norm",
    "outer",
    "parse_multivector",
    "reverse",
    "rotate",
    "scalar_product",
    "__version__",
]
