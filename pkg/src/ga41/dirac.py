"""Momentum-space eigensystem of the spin-1/2 wave operator and the
matrix crosscheck of the geometric plane wave.

The operator A = p_m alpha^m + m beta squares to E^2 for a null
momentum, so its spectrum is {+E, +E, -E, -E}.  Columns of the ordered
eigenbasis reproduce, through the inverse matrix map, multivector waves
annihilated by the mass-term derivative operator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Multivector, PSEUDOSCALAR, e
from .matrices import ALPHA, BETA, IDENTITY, from_matrix, to_matrix
from .monogenic import MomentumVector, MultivectorField, harmonic_field

#: images of pseudoscalar * e23, * e31, * e12: the spin-axis matrices
SPIN_IMAGES = (
    to_matrix(PSEUDOSCALAR * e(2, 3)),
    to_matrix(PSEUDOSCALAR * (-1.0) * e(1, 3)),
    to_matrix(PSEUDOSCALAR * e(1, 2)),
)


@dataclass(frozen=True)
class DiracSystem:
    """Momentum k with the operator a_bar, eigencolumn matrix psi_bar,
    and eigenvalue matrix lam (a_bar @ psi_bar = psi_bar @ lam)."""

    k: MomentumVector
    a_bar: np.ndarray
    psi_bar: np.ndarray
    lam: np.ndarray

    def __post_init__(self):
        for name in ("a_bar", "psi_bar", "lam"):
            arr = np.asarray(getattr(self, name), dtype=complex)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)


def build_dirac_operator(k: MomentumVector) -> np.ndarray:
    p1, p2, p3 = k.momentum
    return p1 * ALPHA[0] + p2 * ALPHA[1] + p3 * ALPHA[2] + k.mass * BETA


def eigendecompose(a, sweep_cap: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvectors and eigenvalues of a self-adjoint complex matrix by
    cyclic Jacobi rotations.

    Deterministic; converges when the off-diagonal Frobenius norm drops
    below 1e-12 times the matrix norm.  Raises ValueError for a
    non-self-adjoint input and ArithmeticError past the sweep cap.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a - a.conj().T)) > 1e-10 * scale:
        raise ValueError("matrix is not self-adjoint")
    work = a.copy()
    vecs = np.eye(n, dtype=complex)
    target = 1e-12 * max(1.0, float(np.linalg.norm(a)))
    # elements this small are below resolution; rotating on them risks
    # overflow in the phase quotient
    negligible = 1e-18 * max(1.0, float(np.linalg.norm(a)))
    off_mask = ~np.eye(n, dtype=bool)
    for _ in range(sweep_cap):
        off = float(np.linalg.norm(work[off_mask]))
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                r = abs(work[p, q])
                if r <= negligible:
                    continue
                phase = work[p, q] / r
                # tan of the smaller rotation angle zeroing the element;
                # for huge tau use the asymptotic root to avoid overflow
                tau = float((work[q, q] - work[p, p]).real) / (2.0 * r)
                if abs(tau) > 1e150:
                    t = 0.5 / tau
                else:
                    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.eye(n, dtype=complex)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s * phase
                rot[q, p] = -s * np.conj(phase)
                work = rot.conj().T @ work @ rot
                vecs = vecs @ rot
    else:
        raise ArithmeticError("eigensolver did not converge within the sweep cap")
    return vecs, np.real(np.diag(work))


def dirac_system(k: MomentumVector) -> DiracSystem:
    """Unordered eigensystem of the momentum operator."""
    a_bar = build_dirac_operator(k)
    vecs, vals = eigendecompose(a_bar)
    return DiracSystem(k, a_bar, vecs, np.diag(vals.astype(complex)))


def _spin_operator(k: MomentumVector) -> np.ndarray:
    p = np.array(k.momentum)
    norm = float(np.linalg.norm(p))
    if norm == 0.0:
        return SPIN_IMAGES[2].copy()
    unit = p / norm
    return unit[0] * SPIN_IMAGES[0] + unit[1] * SPIN_IMAGES[1] + unit[2] * SPIN_IMAGES[2]


def order_eigensystem(system: DiracSystem) -> DiracSystem:
    """Columns reordered to (+E spin-up, +E spin-down, -E spin-down,
    -E spin-up), each with its largest component made real positive.

    Requires E > 0; the eigenvalue matrix of the result is exactly
    E * diag(1, 1, -1, -1).
    """
    energy = system.k.energy
    if energy <= 0:
        raise ValueError("ordering requires the positive-energy branch")
    vals = np.real(np.diag(system.lam))
    pos = [i for i in range(len(vals)) if vals[i] > 0]
    neg = [i for i in range(len(vals)) if vals[i] <= 0]
    if len(pos) != 2 or len(neg) != 2:
        raise ArithmeticError("spectrum is not a doubled +-E pair")
    spin = _spin_operator(system.k)
    blocks = []
    for group in (pos, neg):
        basis = system.psi_bar[:, group]
        rot, svals = eigendecompose(basis.conj().T @ spin @ basis)
        # descending spin eigenvalue in both blocks; at p = 0 this makes
        # the eigencolumn matrix exactly the identity
        idx = np.argsort(svals)[::-1]
        blocks.append(basis @ rot[:, idx])
    psi = np.hstack(blocks)
    for j in range(psi.shape[1]):
        col = psi[:, j]
        lead = col[int(np.argmax(np.abs(col)))]
        col = col * (np.conj(lead) / abs(lead))
        psi[:, j] = col / np.linalg.norm(col)
    lam = np.diag([energy, energy, -energy, -energy]).astype(complex)
    return DiracSystem(system.k, system.a_bar, psi, lam)


def geometric_matrix_crosscheck(k: MomentumVector, points) -> float:
    """Residual of the matrix-side plane wave against two facts: the
    amplitude image equals E + A, and the transported first-order
    operator annihilates the wave.

    The matrix map sends the pseudoscalar to -i times the identity, so
    the matrix wave carries the conjugated phase exp(i(E t - p.x)).
    Derivatives are applied analytically.
    """
    energy = k.energy
    p = np.array(k.momentum)
    a_bar = build_dirac_operator(k)
    amp = energy * IDENTITY + a_bar
    residual = float(np.max(np.abs(to_matrix(k.amplitude) - amp)))
    for x in points:
        x = np.asarray(x, dtype=float)[:4]
        phase = np.exp(1j * (energy * x[0] - p @ x[1:4]))
        wave = amp * phase
        # i d/dt + i alpha^m d/dx^m + m beta, with the phase derivatives
        out = 1j * (1j * energy) * wave + k.mass * BETA @ wave
        for m in range(3):
            out = out + 1j * ALPHA[m] @ ((-1j * p[m]) * wave)
        residual = max(residual, float(np.max(np.abs(out))))
    return residual


def column_wave(system: DiracSystem, index: int) -> MultivectorField:
    """Multivector wave of one eigencolumn: the inverse matrix map of
    the column (kept in place, others zeroed) times the plane phase of
    its eigenvalue."""
    if index not in range(4):
        raise ValueError("column index must be 0..3")
    selector = np.zeros((4, 4), dtype=complex)
    selector[index, index] = 1.0
    amplitude = from_matrix(np.asarray(system.psi_bar) @ selector)
    lam = float(np.real(system.lam[index, index]))
    grad = np.array([-lam, *system.k.momentum, 0.0])
    return harmonic_field(amplitude, grad)
