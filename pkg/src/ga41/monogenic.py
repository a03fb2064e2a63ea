"""Monogenic fields: plane waves on null momenta, numeric and analytic
derivative operators, 3-dimensional polynomial solutions, and separable
wavepackets.

A field is monogenic when the vector derivative (the sum of reciprocal
basis vectors times partial derivatives over the five axes) annihilates
it.  Axis 0 is time-like, axes 1..3 are ordinary space, axis 4 carries
the harmonic mass dependence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .algebra import (
    GRADES,
    Multivector,
    N_BLADES,
    ONE,
    PSEUDOSCALAR,
    blade_product,
    e,
    e_upper,
)

AXES = 5

#: reciprocal orthonormal basis: index 0 flips sign under (-++++)
RECIPROCAL_VECTORS = tuple(e_upper(k) for k in range(AXES))

_ZERO = Multivector.from_scalar(0.0)


@dataclass(frozen=True)
class MomentumVector:
    """Null momentum (E, p, m): E^2 = |p|^2 + m^2 within 1e-12.

    Built directly from all four numbers, or from (p, m) via
    :meth:`from_mass_momentum`, which derives E = +sqrt(p^2 + m^2) and
    optionally flips to the negative-energy branch.
    """

    energy: float
    momentum: tuple[float, float, float]
    mass: float

    def __post_init__(self):
        p = tuple(float(q) for q in self.momentum)
        if len(p) != 3:
            raise ValueError("momentum must have three components")
        object.__setattr__(self, "momentum", p)
        object.__setattr__(self, "energy", float(self.energy))
        object.__setattr__(self, "mass", float(self.mass))
        if self.mass < 0:
            raise ValueError("mass must be nonnegative")
        gap = self.null_gap
        if abs(gap) > 1e-12 * max(1.0, self.energy**2):
            raise ValueError(f"momentum is not null: E^2 - p^2 - m^2 = {gap:.3e}")

    @classmethod
    def from_mass_momentum(
        cls, momentum, mass: float, negative_energy: bool = False
    ) -> "MomentumVector":
        p = tuple(float(q) for q in momentum)
        energy = math.sqrt(sum(q * q for q in p) + float(mass) ** 2)
        return cls(-energy if negative_energy else energy, p, float(mass))

    @property
    def null_gap(self) -> float:
        return self.energy**2 - sum(q * q for q in self.momentum) - self.mass**2

    @property
    def phase_gradient(self) -> np.ndarray:
        """Partial derivatives of the phase: (-E, p1, p2, p3, m)."""
        return np.array([-self.energy, *self.momentum, self.mass])

    @property
    def vector(self) -> Multivector:
        """u = E e0 + p_k ek + m e4; squares to the null gap."""
        out = self.energy * e(0) + self.mass * e(4)
        for k, q in enumerate(self.momentum):
            out = out + q * e(k + 1)
        return out

    @property
    def amplitude(self) -> Multivector:
        """Wave amplitude E + p_k e0k + m e04, equal to u times -e0."""
        out = self.energy * ONE + self.mass * e(0, 4)
        for k, q in enumerate(self.momentum):
            out = out + q * e(0, k + 1)
        return out


@dataclass(frozen=True)
class MultivectorField:
    """A multivector-valued function of a 5-point, with an optional
    analytic partial-derivative evaluator (point, axis) -> value."""

    value: Callable[[np.ndarray], Multivector]
    derivative: Optional[Callable[[np.ndarray, int], Multivector]] = None

    def __call__(self, x) -> Multivector:
        return self.value(np.asarray(x, dtype=float))


def harmonic_field(amplitude: Multivector, phase_gradient) -> MultivectorField:
    """amplitude times a unit phase rotor exp(pseudoscalar * g.x)."""
    grad = np.array(phase_gradient, dtype=float)
    if grad.shape != (AXES,):
        raise ValueError("phase gradient must have five components")
    amp_i = amplitude * PSEUDOSCALAR

    def value(x) -> Multivector:
        ph = float(grad @ np.asarray(x, dtype=float))
        return amplitude * math.cos(ph) + amp_i * math.sin(ph)

    def derivative(x, axis: int) -> Multivector:
        ph = float(grad @ np.asarray(x, dtype=float))
        c = float(grad[axis])
        return (amp_i * math.cos(ph) - amplitude * math.sin(ph)) * c

    return MultivectorField(value, derivative)


def plane_wave(k: MomentumVector) -> MultivectorField:
    """The monogenic plane wave of a null momentum.

    Value: (E + p_k e0k + m e04) * exp(pseudoscalar * phase) with phase
    -E t + p.x + m x4.  Carries analytic partial derivatives.
    """
    return harmonic_field(k.amplitude, k.phase_gradient)


def plane_wave_variant(
    k: MomentumVector, time_sign: int = 1, mass_sign: int = 1
) -> MultivectorField:
    """Same amplitude with the time and mass phase terms optionally
    flipped; only the (+1, +1) choice is monogenic away from p = 0."""
    grad = k.phase_gradient.copy()
    grad[0] *= time_sign
    grad[4] *= mass_sign
    return harmonic_field(k.amplitude, grad)


def vector_derivative(
    field: MultivectorField,
    x,
    h: float | None = None,
    indices: tuple[int, ...] = (0, 1, 2, 3, 4),
) -> Multivector:
    """Sum of reciprocal basis vectors times partial derivatives.

    h = None uses the field's analytic derivative; a positive h uses
    second-order central differences.  ``indices`` restricts the sum,
    e.g. (1, 2, 3) for the purely spatial operator.
    """
    x = np.asarray(x, dtype=float)
    total = _ZERO
    if h is None:
        if field.derivative is None:
            raise ValueError("field has no analytic derivative; pass a step h")
        for a in indices:
            total = total + RECIPROCAL_VECTORS[a] * field.derivative(x, a)
        return total
    if h <= 0:
        raise ValueError("step h must be positive")
    for a in indices:
        step = np.zeros(AXES)
        step[a] = h
        diff = (field.value(x + step) - field.value(x - step)) / (2.0 * h)
        total = total + RECIPROCAL_VECTORS[a] * diff
    return total


def laplacian(
    field: MultivectorField, x, h: float = 1e-3, richardson: bool = False
) -> Multivector:
    """Second-order operator -d2/dt2 + sum_i d2/dxi2 by central
    differences; richardson=True combines steps h and h/2 to cancel the
    leading truncation term."""
    if h <= 0:
        raise ValueError("step h must be positive")
    if richardson:
        coarse = laplacian(field, x, h)
        fine = laplacian(field, x, h / 2.0)
        return (4.0 * fine - coarse) / 3.0
    x = np.asarray(x, dtype=float)
    center = field.value(x)
    total = _ZERO
    for a in range(AXES):
        step = np.zeros(AXES)
        step[a] = h
        second = (field.value(x + step) - 2.0 * center + field.value(x - step)) / (h * h)
        total = total + (-second if a == 0 else second)
    return total


def reduced_vector_derivative(
    field: MultivectorField, x, mass: float, h: float | None = None
) -> Multivector:
    """Vector derivative with the fourth axis replaced by its harmonic
    eigenvalue: sum over axes 0..3 plus pseudoscalar * mass * e4 * F."""
    partial = vector_derivative(field, x, h=h, indices=(0, 1, 2, 3))
    return partial + PSEUDOSCALAR * e_upper(4) * field.value(x) * mass


# -- 3-dimensional monogenic polynomials -------------------------------

#: blades spanning the even subalgebra of the axes 1..3 generators
EVEN_SPATIAL_MASKS = (0, 0b00110, 0b01010, 0b01100)
#: the two cells singled out by the separable-packet construction
FLAGGED_MASKS = (0, 0b00110)

_SUPPORTED_DEGREES = (0, 1, 2, 3)


def _monomials(degree: int) -> list[tuple[int, int, int]]:
    return [
        (a, b, degree - a - b)
        for a in range(degree, -1, -1)
        for b in range(degree - a, -1, -1)
    ]


def _spatial_derivative_matrix(degree: int) -> np.ndarray:
    """Integer matrix of the axes-1..3 vector derivative on polynomials
    of the given degree with even-subalgebra values.

    Columns: (monomial, even blade); rows: (degree-1 monomial, any of
    the 32 blades).
    """
    monos = _monomials(degree)
    lower = _monomials(degree - 1) if degree > 0 else []
    lower_index = {m: i for i, m in enumerate(lower)}
    mat = np.zeros((len(lower) * N_BLADES, len(monos) * len(EVEN_SPATIAL_MASKS)))
    for mi, mono in enumerate(monos):
        for bi, bmask in enumerate(EVEN_SPATIAL_MASKS):
            col = mi * len(EVEN_SPATIAL_MASKS) + bi
            for axis in (1, 2, 3):
                expo = mono[axis - 1]
                if expo == 0:
                    continue
                reduced = list(mono)
                reduced[axis - 1] -= 1
                sign, rmask = blade_product(1 << axis, bmask)
                row = lower_index[tuple(reduced)] * N_BLADES + rmask
                mat[row, col] += expo * sign
    return mat


def _rref_nullspace(mat: np.ndarray, tol: float = 1e-10) -> list[np.ndarray]:
    """Nullspace basis by Gauss-Jordan elimination with partial pivoting."""
    m = mat.astype(float).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        lead = int(np.argmax(np.abs(m[r:, c]))) + r
        if abs(m[lead, c]) <= tol:
            continue
        m[[r, lead]] = m[[lead, r]]
        m[r] = m[r] / m[r, c]
        for rr in range(rows):
            if rr != r and m[rr, c] != 0.0:
                m[rr] = m[rr] - m[rr, c] * m[r]
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = np.zeros(cols)
        v[free] = 1.0
        for i, pc in enumerate(pivots):
            v[pc] = -m[i, free]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class PolynomialField(MultivectorField):
    """Polynomial solution of the spatial vector derivative; flagged
    fields take values in the scalar + e12 plane only."""

    degree: int = 0
    flagged: bool = False


def _polynomial_field(degree: int, vec: np.ndarray) -> PolynomialField:
    monos = _monomials(degree)
    nb = len(EVEN_SPATIAL_MASKS)
    terms = []
    for mi, mono in enumerate(monos):
        coeffs = np.zeros(N_BLADES)
        for bi, bmask in enumerate(EVEN_SPATIAL_MASKS):
            coeffs[bmask] = vec[mi * nb + bi]
        if np.any(coeffs != 0.0):
            terms.append((mono, Multivector(coeffs)))
    flagged = all(
        set(np.nonzero(mv.coeffs)[0]) <= set(FLAGGED_MASKS) for _, mv in terms
    )

    def value(x) -> Multivector:
        x = np.asarray(x, dtype=float)
        acc = _ZERO
        for (a, b, c), mv in terms:
            acc = acc + mv * (x[1] ** a * x[2] ** b * x[3] ** c)
        return acc

    def derivative(x, axis: int) -> Multivector:
        x = np.asarray(x, dtype=float)
        acc = _ZERO
        if axis in (1, 2, 3):
            for mono, mv in terms:
                expo = mono[axis - 1]
                if expo == 0:
                    continue
                reduced = list(mono)
                reduced[axis - 1] -= 1
                a, b, c = reduced
                acc = acc + mv * (expo * x[1] ** a * x[2] ** b * x[3] ** c)
        return acc

    return PolynomialField(value, derivative, degree=degree, flagged=flagged)


def monogenic_polynomials_3d(degree: int) -> list[PolynomialField]:
    """Basis of polynomial fields of the given total degree, with values
    in the even subalgebra of axes 1..3, annihilated by the spatial
    vector derivative.

    Fields whose values stay in the scalar + e12 plane come first and
    are flagged; the rest complete the basis.
    """
    if degree not in _SUPPORTED_DEGREES:
        raise ValueError(f"unsupported degree: {degree}")
    monos = _monomials(degree)
    nb = len(EVEN_SPATIAL_MASKS)
    ncols = len(monos) * nb
    if degree == 0:
        full = [np.eye(ncols)[:, i] for i in range(ncols)]
    else:
        full = _rref_nullspace(_spatial_derivative_matrix(degree))

    # restricted system over the flagged cells only, solved first so the
    # flagged fields head the basis
    flag_cols = [
        mi * nb + bi
        for mi in range(len(monos))
        for bi, bmask in enumerate(EVEN_SPATIAL_MASKS)
        if bmask in FLAGGED_MASKS
    ]
    if degree == 0:
        restricted = [np.eye(len(flag_cols))[:, i] for i in range(len(flag_cols))]
    else:
        restricted = _rref_nullspace(_spatial_derivative_matrix(degree)[:, flag_cols])
    chosen: list[np.ndarray] = []
    for rvec in restricted:
        v = np.zeros(ncols)
        v[flag_cols] = rvec
        chosen.append(v)
    # complete with full-nullspace vectors that increase the rank
    for v in full:
        stack = np.array(chosen + [v])
        if np.linalg.matrix_rank(stack, tol=1e-10) > len(chosen):
            chosen.append(v)
    return [_polynomial_field(degree, v) for v in chosen]


def separable_wavepacket(spatial: MultivectorField, k) -> MultivectorField:
    """Product of a spatial factor and a (t, x4) plane wave with E^2 = m^2.

    The spatial factor must commute with the index-0 and index-4
    generators (checked on a sample grid); together with spatial
    monogenicity this makes the product monogenic in all five axes
    without spreading.
    """
    energy, mass = float(k[0]), float(k[1])
    if abs(energy * energy - mass * mass) > 1e-12 * max(1.0, energy * energy):
        raise ValueError("separable factor requires E^2 = m^2")
    ticks = (-1.0, -0.3, 0.4, 1.0)
    for x1 in ticks:
        for x2 in ticks:
            for x3 in ticks:
                point = np.array([0.0, x1, x2, x3, 0.0])
                v = spatial.value(point)
                scale = max(1.0, v.max_abs())
                for gen in (e(0), e(4)):
                    if (v * gen - gen * v).max_abs() > 1e-10 * scale:
                        raise ValueError(
                            "spatial factor must commute with the index-0 "
                            "and index-4 generators"
                        )
    amp = energy * ONE + mass * e(0, 4)
    amp_i = amp * PSEUDOSCALAR

    def temporal(x) -> Multivector:
        ph = -energy * x[0] + mass * x[4]
        return amp * math.cos(ph) + amp_i * math.sin(ph)

    def value(x) -> Multivector:
        x = np.asarray(x, dtype=float)
        return spatial.value(x) * temporal(x)

    derivative = None
    if spatial.derivative is not None:
        base_value, base_deriv = spatial.value, spatial.derivative

        def derivative(x, axis: int) -> Multivector:
            x = np.asarray(x, dtype=float)
            if axis in (1, 2, 3):
                return base_deriv(x, axis) * temporal(x)
            ph = -energy * x[0] + mass * x[4]
            c = -energy if axis == 0 else mass
            dtemp = (amp_i * math.cos(ph) - amp * math.sin(ph)) * c
            return base_value(x) * dtemp

    return MultivectorField(value, derivative)
