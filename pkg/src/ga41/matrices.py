"""Isomorphism between the 32-dimensional algebra and complex 4x4 matrices.

The five generator images follow the Dirac-Pauli assignment.  The frozen
constants below tabulate the images of the raised-index (reciprocal)
unit vectors; the direct basis maps through index 0 with a sign flip,
matching the reciprocal rule of an orthonormal frame under (-++++).

The map is a real-algebra isomorphism: every blade goes to the ordered
product of its generator images, the pseudoscalar lands on -i times the
identity, and real linear combinations carry over coefficientwise.
"""

from __future__ import annotations

import numpy as np

from .algebra import GRADES, Multivector, N_BLADES, blade_product

IDENTITY = np.eye(4, dtype=complex)

#: images of the three momentum-direction generators in the standard
#: block form (off-diagonal Pauli blocks) plus the diagonal mass matrix
ALPHA = (
    np.array(
        [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]],
        dtype=complex,
    ),
    np.array(
        [[0, 0, 0, -1j], [0, 0, 1j, 0], [0, -1j, 0, 0], [1j, 0, 0, 0]],
        dtype=complex,
    ),
    np.array(
        [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]],
        dtype=complex,
    ),
)
BETA = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]],
    dtype=complex,
)

#: images of the five raised-index unit vectors, frozen entry by entry
RECIPROCAL_IMAGES = (
    np.array(
        [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]],
        dtype=complex,
    ),
    np.array(
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]],
        dtype=complex,
    ),
    np.array(
        [[0, -1j, 0, 0], [1j, 0, 0, 0], [0, 0, 0, 1j], [0, 0, -1j, 0]],
        dtype=complex,
    ),
    np.array(
        [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]],
        dtype=complex,
    ),
    np.array(
        [[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]],
        dtype=complex,
    ),
)


def sigma_matrix(index: int) -> np.ndarray:
    """Frozen matrix image of the raised-index unit vector (copy)."""
    if not 0 <= index <= 4:
        raise ValueError(f"basis index out of range: {index}")
    return RECIPROCAL_IMAGES[index].copy()


#: images of the direct (lower-index) basis vectors
GENERATOR_IMAGES = (-RECIPROCAL_IMAGES[0],) + RECIPROCAL_IMAGES[1:]


def _build_blade_images() -> np.ndarray:
    images = np.zeros((N_BLADES, 4, 4), dtype=complex)
    images[0] = IDENTITY
    for mask in range(1, N_BLADES):
        m = IDENTITY
        for k in range(5):
            if mask >> k & 1:
                m = m @ GENERATOR_IMAGES[k]
        images[mask] = m
    return images


BLADE_IMAGES = _build_blade_images()
BLADE_IMAGES.flags.writeable = False

# blade inverses are +-blade according to the blade square sign
_BLADE_SQUARE_SIGNS = np.array([blade_product(m, m)[0] for m in range(N_BLADES)])
_LOW_MASKS = tuple(m for m in range(N_BLADES) if GRADES[m] <= 2)
_DUALS = {m: blade_product(N_BLADES - 1, m) for m in _LOW_MASKS}


def to_matrix(a: Multivector) -> np.ndarray:
    """Matrix image of a multivector."""
    return np.tensordot(a.coeffs, BLADE_IMAGES, axes=1)


def from_matrix(m: np.ndarray) -> Multivector:
    """Inverse map, defined on every complex 4x4 matrix.

    The complex coefficient of each grade <= 2 blade is read off through
    the trace pairing; its real part fills that blade's cell and its
    imaginary part fills the dual (pseudoscalar complement) cell.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    coeffs = np.zeros(N_BLADES)
    for mask in _LOW_MASKS:
        inverse = _BLADE_SQUARE_SIGNS[mask] * BLADE_IMAGES[mask]
        z = 0.25 * np.trace(inverse @ m)
        coeffs[mask] = z.real
        dual_sign, dual_mask = _DUALS[mask]
        coeffs[dual_mask] = -dual_sign * z.imag
    return Multivector(coeffs)


def matrix_text(m: np.ndarray) -> str:
    """Row-major "re+imi" rendering, one text line per matrix row."""
    m = np.asarray(m, dtype=complex)
    rows = []
    for row in m:
        rows.append("  ".join(f"{z.real:g}{z.imag:+g}i" for z in row))
    return "\n".join(rows)
