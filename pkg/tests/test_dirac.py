"""Momentum-space wave operator: solver, ordering, and crosschecks."""

import numpy as np
import pytest

from ga41 import MomentumVector
from ga41.dirac import (
    DiracSystem,
    SPIN_IMAGES,
    build_dirac_operator,
    column_wave,
    dirac_system,
    eigendecompose,
    geometric_matrix_crosscheck,
    order_eigensystem,
)
from ga41.monogenic import reduced_vector_derivative

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
Z2 = np.zeros((2, 2), dtype=complex)


def random_null(rng):
    mass = float(rng.uniform(0.1, 4.0))
    momentum = tuple(float(q) for q in rng.uniform(-3, 3, 3))
    return MomentumVector.from_mass_momentum(momentum, mass)


def random_hermitian(rng, n):
    m = rng.uniform(-2, 2, (n, n)) + 1j * rng.uniform(-2, 2, (n, n))
    return m + m.conj().T


def test_operator_structure():
    k = MomentumVector(5.0, (3.0, 0.0, 0.0), 4.0)
    a = build_dirac_operator(k)
    want = 3.0 * np.block([[Z2, PAULI[0]], [PAULI[0], Z2]])
    want = want + 4.0 * np.block([[np.eye(2), Z2], [Z2, -np.eye(2)]])
    assert np.array_equal(a, want)
    assert np.array_equal(a, a.conj().T)
    assert np.trace(a) == 0.0


def test_operator_squares_to_energy():
    k = MomentumVector(5.0, (3.0, 0.0, 0.0), 4.0)
    a = build_dirac_operator(k)
    assert np.array_equal(a @ a, 25.0 * np.eye(4))
    rng = np.random.default_rng(41)
    for _ in range(20):
        k = random_null(rng)
        a = build_dirac_operator(k)
        res = np.max(np.abs(a @ a - k.energy**2 * np.eye(4)))
        assert res <= 1e-12 * max(1.0, k.energy**2)


def test_spin_images_are_block_pauli():
    for s, sigma in zip(SPIN_IMAGES, PAULI):
        assert np.array_equal(s, np.block([[sigma, Z2], [Z2, sigma]]))


def test_eigendecompose_against_library_solver():
    rng = np.random.default_rng(42)
    for n in (2, 4, 6):
        for _ in range(5):
            a = random_hermitian(rng, n)
            vecs, vals = eigendecompose(a)
            want = np.linalg.eigvalsh(a)
            assert np.max(np.abs(np.sort(vals) - want)) <= 1e-10
            res = np.max(np.abs(a @ vecs - vecs @ np.diag(vals)))
            assert res <= 1e-10 * max(1.0, float(np.linalg.norm(a)))
            unit = np.max(np.abs(vecs.conj().T @ vecs - np.eye(n)))
            assert unit <= 1e-12


def test_eigendecompose_diagonal_passthrough():
    d = np.diag([3.0, -1.0, 2.0, 0.5]).astype(complex)
    vecs, vals = eigendecompose(d)
    assert np.array_equal(vecs, np.eye(4, dtype=complex))
    assert np.array_equal(vals, np.array([3.0, -1.0, 2.0, 0.5]))


def test_eigendecompose_deterministic():
    rng = np.random.default_rng(43)
    a = random_hermitian(rng, 4)
    v1, l1 = eigendecompose(a)
    v2, l2 = eigendecompose(a)
    assert np.array_equal(v1, v2)
    assert np.array_equal(l1, l2)


def test_eigendecompose_validation():
    with pytest.raises(ValueError):
        eigendecompose(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        eigendecompose(np.zeros((2, 3)))
    with pytest.raises(ArithmeticError):
        eigendecompose(random_hermitian(np.random.default_rng(0), 6), sweep_cap=0)


def test_spectrum_is_doubled_pair():
    rng = np.random.default_rng(44)
    for _ in range(20):
        k = random_null(rng)
        system = dirac_system(k)
        vals = np.sort(np.real(np.diag(system.lam)))
        want = np.array([-k.energy, -k.energy, k.energy, k.energy])
        assert np.max(np.abs(vals - want)) <= 1e-10 * max(1.0, k.energy)


def test_ordered_system_contract():
    rng = np.random.default_rng(45)
    for _ in range(10):
        k = random_null(rng)
        system = order_eigensystem(dirac_system(k))
        e_val = k.energy
        assert np.array_equal(
            system.lam, np.diag([e_val, e_val, -e_val, -e_val]).astype(complex)
        )
        recon = np.max(np.abs(system.a_bar @ system.psi_bar - system.psi_bar @ system.lam))
        assert recon <= 1e-10 * max(1.0, e_val)
        unit = np.max(np.abs(system.psi_bar.conj().T @ system.psi_bar - np.eye(4)))
        assert unit <= 1e-12


def test_rest_frame_columns_are_identity():
    k = MomentumVector(2.0, (0.0, 0.0, 0.0), 2.0)
    system = order_eigensystem(dirac_system(k))
    assert np.array_equal(system.psi_bar, np.eye(4, dtype=complex))


def test_ordering_by_spin_projection():
    k = MomentumVector.from_mass_momentum((0.0, 0.0, 1.5), 2.0)
    system = order_eigensystem(dirac_system(k))
    spin = SPIN_IMAGES[2]
    for cols in ((0, 1), (2, 3)):
        block = system.psi_bar[:, cols]
        proj = block.conj().T @ spin @ block
        assert np.max(np.abs(proj - np.diag([1.0, -1.0]))) <= 1e-10


def test_ordering_deterministic():
    k = MomentumVector.from_mass_momentum((1.0, -0.5, 2.0), 1.0)
    a = order_eigensystem(dirac_system(k))
    b = order_eigensystem(dirac_system(k))
    assert np.array_equal(a.psi_bar, b.psi_bar)


def test_ordering_validation():
    neg = MomentumVector.from_mass_momentum((1.0, 0.0, 0.0), 1.0, negative_energy=True)
    with pytest.raises(ValueError):
        order_eigensystem(dirac_system(neg))
    k = MomentumVector(1.0, (0.0, 0.0, 0.0), 1.0)
    fake = DiracSystem(k, np.eye(4), np.eye(4), np.diag([1.0, 1.0, 1.0, -1.0]))
    with pytest.raises(ArithmeticError):
        order_eigensystem(fake)


def test_phase_convention_leading_component():
    rng = np.random.default_rng(46)
    for _ in range(5):
        k = random_null(rng)
        system = order_eigensystem(dirac_system(k))
        for j in range(4):
            col = system.psi_bar[:, j]
            lead = col[int(np.argmax(np.abs(col)))]
            assert abs(lead.imag) <= 1e-12
            assert lead.real > 0.0


def test_geometric_matrix_crosscheck():
    points = [np.zeros(5), np.array([0.3, -0.2, 0.5, 0.1, 0.0])]
    exact = MomentumVector(5.0, (3.0, 0.0, 0.0), 4.0)
    assert geometric_matrix_crosscheck(exact, points) <= 1e-12
    rng = np.random.default_rng(47)
    for _ in range(10):
        k = random_null(rng)
        res = geometric_matrix_crosscheck(k, points)
        assert res <= 1e-10 * max(1.0, k.energy**2)


def test_column_waves_solve_reduced_equation():
    rng = np.random.default_rng(48)
    k = MomentumVector.from_mass_momentum((1.0, 2.0, -0.5), 1.5)
    system = order_eigensystem(dirac_system(k))
    for index in range(4):
        field = column_wave(system, index)
        for _ in range(3):
            x = rng.uniform(-1, 1, 5)
            scale = max(1.0, field(x).max_abs()) * max(1.0, k.energy)
            res = reduced_vector_derivative(field, x, k.mass).max_abs()
            assert res <= 1e-10 * scale


def test_column_wave_validation():
    k = MomentumVector(1.0, (0.0, 0.0, 0.0), 1.0)
    system = order_eigensystem(dirac_system(k))
    with pytest.raises(ValueError):
        column_wave(system, 4)
    with pytest.raises(ValueError):
        column_wave(system, -1)
