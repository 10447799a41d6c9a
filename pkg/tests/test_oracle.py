"""Exact-diagonalization oracle: operator identities, sectors, eigensolver."""

import numpy as np
import pytest

from qchain import (
    CapacityError,
    ChainConfig,
    DimensionMismatchError,
    EmptySectorError,
    InvalidParameterError,
    NotHermitianError,
    OperatorMatrix,
    ZeroDenominatorError,
    build_collective_ops,
    build_excitation_number,
    build_hamiltonian,
    commutator,
    deformation_factor,
    eigh,
    hs_projection,
    jacobi_eigh,
    sector_spectrum,
)
from qchain.oracle import BasisLabel, sector_basis


def _config(n, l, wq=1.0, w0=1.0, eta=0.0):
    return ChainConfig(n_qubits=n, spacing=l, qubit_freq=wq, photon_freq=w0, coupling=eta)


def test_basis_label_ordering_is_photon_major():
    labels = [BasisLabel(1, "00"), BasisLabel(0, "11"), BasisLabel(0, "01"), BasisLabel(1, "10")]
    assert sorted(labels) == [
        BasisLabel(0, "01"),
        BasisLabel(0, "11"),
        BasisLabel(1, "00"),
        BasisLabel(1, "10"),
    ]
    assert BasisLabel(0, "10").occupation == 2
    assert BasisLabel(0, "10").excited_count == 1


def test_single_qubit_raising_operator():
    ops = build_collective_ops(_config(1, 0.37))
    expected = np.array([[0.0, 0.0], [1.0, 0.0]])
    assert np.abs(ops.s_plus.entries - expected).max() <= 1e-15


def test_two_qubit_half_spacing_couples_only_qubit_zero():
    # cos(pi/2) kills qubit 1; hand-built 4x4 comparison
    ops = build_collective_ops(_config(2, 0.5))
    expected = np.zeros((4, 4))
    expected[1, 0] = 1.0  # |00> -> |01>
    expected[3, 2] = 1.0  # |10> -> |11>
    assert np.abs(ops.s_plus.entries - expected).max() <= 1e-12


def test_collective_commutator_identities():
    for n in range(1, 7):
        for l in (0.1, 0.37, 2 / 3, 1.4):
            ops = build_collective_ops(_config(n, l))
            lhs = commutator(ops.s_plus, ops.s_minus).entries
            assert np.abs(lhs - 2.0 * ops.sigma_z.entries).max() <= 1e-12
            assert np.abs(
                commutator(ops.s_z, ops.s_plus).entries - ops.s_plus.entries
            ).max() <= 1e-12
            assert np.abs(
                commutator(ops.s_z, ops.s_minus).entries + ops.s_minus.entries
            ).max() <= 1e-12


def test_deformed_commutator_is_only_an_approximation_with_vanishing_limit():
    # ||[S+,S-] - 2 R S_z||_F -> 0 toward both the small-l and integer-l limits
    for seq in ([0.1, 0.01, 0.001], [1.1, 1.01, 1.001]):
        norms = []
        for l in seq:
            ops = build_collective_ops(_config(5, l))
            r = deformation_factor(5, l).value
            defect = commutator(ops.s_plus, ops.s_minus).entries - 2.0 * r * ops.s_z.entries
            norms.append(np.linalg.norm(defect))
        assert norms[0] > norms[1] > norms[2]
        assert norms[2] < 1e-3


def test_commutator_of_identity_vanishes_and_dims_must_match():
    ops = build_collective_ops(_config(2, 0.3))
    ident = OperatorMatrix(np.eye(4), ops.s_z.basis, hermitian=True)
    assert np.abs(commutator(ident, ops.s_plus).entries).max() == 0.0
    other = build_collective_ops(_config(3, 0.3))
    with pytest.raises(DimensionMismatchError):
        commutator(ops.s_z, other.s_z)


def test_hs_projection_reproduces_deformation_factor():
    ops = build_collective_ops(_config(4, 2 / 3))
    assert hs_projection(ops.s_z, ops.s_z) == pytest.approx(1.0, abs=1e-15)
    assert hs_projection(ops.sigma_z, ops.s_z) == pytest.approx(0.625, abs=1e-12)
    ops3 = build_collective_ops(_config(3, 2.0))
    assert hs_projection(ops3.sigma_z, ops3.s_z) == pytest.approx(1.0, abs=1e-12)
    for n in range(1, 7):
        for l in np.linspace(0.08, 2.0, 6):
            ops = build_collective_ops(_config(n, l))
            assert hs_projection(ops.sigma_z, ops.s_z) == pytest.approx(
                deformation_factor(n, l).value, abs=1e-10
            )


def test_hs_projection_zero_denominator():
    ops = build_collective_ops(_config(2, 0.3))
    zero = OperatorMatrix(np.zeros((4, 4)), ops.s_z.basis, hermitian=True)
    with pytest.raises(ZeroDenominatorError):
        hs_projection(ops.sigma_z, zero)


def test_decoupled_hamiltonian_is_diagonal():
    cfg = _config(3, 0.4, wq=0.9, w0=1.7, eta=0.0)
    h = build_hamiltonian(cfg, 2)
    off = h.entries - np.diag(np.diagonal(h.entries))
    assert np.abs(off).max() == 0.0
    for i, label in enumerate(h.basis):
        expected = 0.9 * (label.excited_count - 1.5) + 1.7 * label.photon_number
        assert h.entries[i, i].real == pytest.approx(expected, abs=1e-13)
    assert abs(np.trace(h.entries).imag) == 0.0


def test_single_qubit_vacuum_doublet():
    # resonant 2x2 block of the u = 1/2 sector splits by +-eta
    cfg = _config(1, 0.9, wq=1.0, w0=1.0, eta=0.25)
    values = sector_spectrum(cfg, 0.5)
    assert values == pytest.approx([0.5 - 0.25, 0.5 + 0.25], abs=1e-12)


def test_hamiltonian_conserves_excitation_number():
    for n, l in ((2, 0.37), (4, 2 / 3), (5, 1.21)):
        cfg = _config(n, l, wq=1.1, w0=0.8, eta=0.3)
        h = build_hamiltonian(cfg, 2)
        n_exc = build_excitation_number(cfg, 2)
        assert np.abs(commutator(h, n_exc).entries).max() <= 1e-12


def test_sector_decomposition_is_complete():
    cfg = _config(3, 0.6, eta=0.2)
    cutoff = 2
    h = build_hamiltonian(cfg, cutoff)
    by_sector = {}
    for label in h.basis:
        u = label.excited_count - cfg.n_qubits / 2.0 + label.photon_number
        by_sector[u] = by_sector.get(u, 0) + 1
    assert sum(by_sector.values()) == (2**cfg.n_qubits) * (cutoff + 1)
    # each full sector whose photon range fits under the cutoff matches the
    # standalone sector build
    for u, count in by_sector.items():
        if u + cfg.n_qubits / 2.0 <= cutoff:
            assert len(sector_basis(cfg, u)) == count


def test_sector_spectrum_decoupled_values():
    cfg = _config(4, 0.4, wq=0.7, w0=1.9, eta=0.0)
    values = sector_spectrum(cfg, 1)
    expected = sorted(
        0.7 * 1 + (1.9 - 0.7) * n for n in range(4) for _ in range(_count_4q(n))
    )
    assert values == pytest.approx(expected, abs=1e-12)
    assert values.size == 15


def _count_4q(n):
    # states of the u=1 sector of 4 qubits with n photons: popcount = 3 - n + ...
    from math import comb

    return comb(4, 3 - n)


def test_sector_spectrum_gauge_invariance():
    for n, u in ((3, 0.5), (4, 1)):
        cfg = _config(n, 0.437, wq=1.0, w0=1.2, eta=0.15)
        base = sector_spectrum(cfg, u)
        shifted = sector_spectrum(_config(n, 1.437, wq=1.0, w0=1.2, eta=0.15), u)
        mirrored = sector_spectrum(_config(n, -0.437, wq=1.0, w0=1.2, eta=0.15), u)
        assert np.abs(base - shifted).max() <= 1e-10
        assert np.abs(base - mirrored).max() <= 1e-10


def test_sector_errors():
    cfg = _config(4, 0.3)
    with pytest.raises(EmptySectorError):
        sector_spectrum(cfg, -3)  # below -N/2
    with pytest.raises(EmptySectorError):
        sector_spectrum(cfg, 0.5)  # wrong parity for even N


def test_capacity_limits():
    with pytest.raises(CapacityError):
        build_collective_ops(_config(13, 0.3))
    with pytest.raises(CapacityError):
        build_hamiltonian(_config(12, 0.3), 3)  # dim 32768 > dense cap
    with pytest.raises(InvalidParameterError):
        build_hamiltonian(_config(2, 0.3), -1)


def test_operator_matrix_validates_hermiticity_flag():
    basis = tuple(BasisLabel(0, format(b, "01b")) for b in range(2))
    with pytest.raises(NotHermitianError):
        OperatorMatrix(np.array([[0.0, 1.0], [0.0, 0.0]]), basis, hermitian=True)


def test_eigh_diagonal_and_swap():
    basis = tuple(BasisLabel(0, format(b, "02b")) for b in range(4))
    diag = OperatorMatrix(np.diag([3.0, -1.0, 2.0, 0.5]), basis, hermitian=True)
    values, vectors = eigh(diag)
    assert values == pytest.approx([-1.0, 0.5, 2.0, 3.0])
    assert np.abs(np.abs(vectors.real).sum(axis=0) - 1.0).max() <= 1e-12

    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    values, _ = jacobi_eigh(swap)
    assert values == pytest.approx([-1.0, 1.0], abs=1e-14)


def test_eigh_requires_hermitian_flag():
    basis = tuple(BasisLabel(0, format(b, "01b")) for b in range(2))
    op = OperatorMatrix(np.array([[0.0, 1.0], [1.0, 0.0]]), basis)
    with pytest.raises(NotHermitianError):
        eigh(op)
    with pytest.raises(NotHermitianError):
        jacobi_eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_jacobi_random_hermitian_properties():
    rng = np.random.default_rng(42)
    for _ in range(3):
        m = rng.normal(size=(50, 50)) + 1j * rng.normal(size=(50, 50))
        m = (m + m.conj().T) / 2.0
        values, vectors = jacobi_eigh(m)
        fro = np.linalg.norm(m)
        residual = max(
            np.linalg.norm(m @ vectors[:, i] - values[i] * vectors[:, i]) for i in range(50)
        )
        assert residual <= 1e-10 * (1.0 + fro)
        assert np.abs(vectors.conj().T @ vectors - np.eye(50)).max() <= 1e-10
        assert np.all(np.diff(values) >= 0.0)


def test_jacobi_is_deterministic():
    rng = np.random.default_rng(11)
    m = rng.normal(size=(20, 20))
    m = (m + m.T) / 2.0
    v1, w1 = jacobi_eigh(m)
    v2, w2 = jacobi_eigh(m)
    assert np.array_equal(v1, v2)
    assert np.array_equal(w1, w2)


def test_jacobi_degenerate_cluster_order():
    values, vectors = jacobi_eigh(np.eye(3))
    assert values == pytest.approx([1.0, 1.0, 1.0])
    # degenerate vectors ordered by first significant component index
    assert np.abs(vectors - np.eye(3)).max() <= 1e-14
