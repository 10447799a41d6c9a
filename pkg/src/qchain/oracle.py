"""Brute-force ground truth on the full qubit (x) Fock space.

Collective operators and the rotating-wave Hamiltonian are built as
explicit dense matrices and diagonalized with an in-house cyclic Jacobi
eigensolver, so every closed-form result in the package can be checked
against something that knows nothing about the deformed algebra.
Desk-scale verification only: dense storage, <= 12 qubits, dims <= ~4000.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import ChainConfig, twice
from .errors import (
    CapacityError,
    DimensionMismatchError,
    EmptySectorError,
    InvalidParameterError,
    NotHermitianError,
    ZeroDenominatorError,
)

__all__ = [
    "MAX_QUBITS",
    "MAX_DENSE_DIM",
    "BasisLabel",
    "OperatorMatrix",
    "CollectiveOps",
    "build_collective_ops",
    "build_hamiltonian",
    "build_excitation_number",
    "commutator",
    "hs_projection",
    "sector_spectrum",
    "eigh",
    "jacobi_eigh",
]

MAX_QUBITS = 12
MAX_DENSE_DIM = 4096

HERMITICITY_TOL = 1e-12


@dataclass(frozen=True, order=True)
class BasisLabel:
    """One product state |n; bits>.

    ``qubit_bits`` is the binary rendering of the occupation integer b,
    where bit j of b set means qubit j excited (so the leftmost character
    is qubit N-1).  Labels order lexicographically: photon number major,
    occupation integer minor.
    """

    photon_number: int
    qubit_bits: str

    @property
    def occupation(self) -> int:
        return int(self.qubit_bits, 2)

    @property
    def excited_count(self) -> int:
        return self.qubit_bits.count("1")


def _qubit_basis(n_qubits: int, photon_number: int = 0) -> tuple[BasisLabel, ...]:
    return tuple(
        BasisLabel(photon_number, format(b, f"0{n_qubits}b")) for b in range(1 << n_qubits)
    )


@dataclass(frozen=True)
class OperatorMatrix:
    """Dense complex operator with its labelled basis.

    When ``hermitian`` is set the entries are checked against the
    adjoint at construction (tolerance 1e-12 entrywise).
    """

    entries: np.ndarray
    basis: tuple[BasisLabel, ...]
    hermitian: bool = False

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=complex)
        object.__setattr__(self, "entries", entries)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise InvalidParameterError(f"entries must be square, got shape {entries.shape}")
        if entries.shape[0] != len(self.basis):
            raise DimensionMismatchError(
                f"entries dim {entries.shape[0]} != basis length {len(self.basis)}"
            )
        if self.hermitian:
            defect = np.abs(entries - entries.conj().T).max() if entries.size else 0.0
            if defect > HERMITICITY_TOL:
                raise NotHermitianError(f"hermitian flag set but max defect {defect:.3e}")

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class CollectiveOps:
    """The four collective qubit-space operators of one chain."""

    s_z: OperatorMatrix
    s_plus: OperatorMatrix
    s_minus: OperatorMatrix
    sigma_z: OperatorMatrix


def _check_capacity(n_qubits: int, dim: int, max_qubits: int):
    if n_qubits > max_qubits:
        raise CapacityError(f"{n_qubits} qubits exceeds the dense cap of {max_qubits}")
    if dim > MAX_DENSE_DIM:
        raise CapacityError(f"dense dimension {dim} exceeds {MAX_DENSE_DIM}")


def build_collective_ops(config: ChainConfig, max_qubits: int = MAX_QUBITS) -> CollectiveOps:
    """Collective operators on the 2^N qubit space.

    S_z = sum_j sigma_{j,z} (eigenvalues +-1/2 per qubit),
    S_+- = sum_j cos(j*pi*l) sigma_{j,+-}, and Sigma_z = sum_j
    cos^2(j*pi*l) sigma_{j,z}, which satisfies [S+, S-] = 2*Sigma_z as an
    exact operator identity.
    """
    n = config.n_qubits
    dim = 1 << n
    _check_capacity(n, dim, max_qubits)
    basis = _qubit_basis(n)
    occ = np.arange(dim)
    pop = np.array([bin(b).count("1") for b in range(dim)])
    weights = config.coupling_profile()

    s_z = np.zeros((dim, dim), dtype=complex)
    np.fill_diagonal(s_z, pop - n / 2.0)

    sig_z = np.zeros((dim, dim), dtype=complex)
    diag = np.zeros(dim)
    for j in range(n):
        bit = (occ >> j) & 1
        diag += weights[j] ** 2 * (bit - 0.5)
    np.fill_diagonal(sig_z, diag)

    s_plus = np.zeros((dim, dim), dtype=complex)
    for j in range(n):
        src = occ[((occ >> j) & 1) == 0]
        s_plus[src + (1 << j), src] += weights[j]

    return CollectiveOps(
        s_z=OperatorMatrix(s_z, basis, hermitian=True),
        s_plus=OperatorMatrix(s_plus, basis),
        s_minus=OperatorMatrix(s_plus.conj().T, basis),
        sigma_z=OperatorMatrix(sig_z, basis, hermitian=True),
    )


def commutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    """AB - BA on a shared basis."""
    if a.basis != b.basis:
        raise DimensionMismatchError("operators live on different bases")
    return OperatorMatrix(a.entries @ b.entries - b.entries @ a.entries, a.basis)


def hs_projection(sigma_z: OperatorMatrix, s_z: OperatorMatrix) -> float:
    """Hilbert-Schmidt projection coefficient tr(A^dag B)/tr(B^dag B) of
    sigma_z onto s_z, evaluated on the full tensor space.  For the
    collective operators this reproduces the deformation factor.
    """
    if sigma_z.basis != s_z.basis:
        raise DimensionMismatchError("operators live on different bases")
    denom = np.vdot(s_z.entries, s_z.entries).real
    if denom == 0.0:
        raise ZeroDenominatorError("projection target has zero Hilbert-Schmidt norm")
    return np.vdot(sigma_z.entries, s_z.entries).real / denom


def _hamiltonian_basis(n_qubits: int, fock_cutoff: int) -> tuple[BasisLabel, ...]:
    return tuple(
        BasisLabel(ph, format(b, f"0{n_qubits}b"))
        for ph in range(fock_cutoff + 1)
        for b in range(1 << n_qubits)
    )


def build_hamiltonian(
    config: ChainConfig, fock_cutoff: int, max_qubits: int = MAX_QUBITS
) -> OperatorMatrix:
    """Rotating-wave Hamiltonian truncated at photon number ``fock_cutoff``::

        H = w_q * sum_j sigma_{j,z} + w_0 * a^dag a
            + eta * sum_j cos(j*pi*l) * (sigma_{j,+} a + sigma_{j,-} a^dag)

    on the 2^N * (fock_cutoff+1) product space, photon-major ordering.
    """
    if not isinstance(fock_cutoff, (int, np.integer)) or fock_cutoff < 0:
        raise InvalidParameterError(f"fock_cutoff must be an integer >= 0, got {fock_cutoff!r}")
    n = config.n_qubits
    qdim = 1 << n
    dim = qdim * (fock_cutoff + 1)
    _check_capacity(n, dim, max_qubits)
    weights = config.coupling_profile()
    occ = np.arange(qdim)
    pop = np.array([bin(b).count("1") for b in range(qdim)])

    h = np.zeros((dim, dim), dtype=complex)
    for ph in range(fock_cutoff + 1):
        base = ph * qdim
        h[base + occ, base + occ] = config.qubit_freq * (pop - n / 2.0) + config.photon_freq * ph
        if ph >= 1:
            amp = config.coupling * math.sqrt(ph)
            for j in range(n):
                src = occ[((occ >> j) & 1) == 0]
                rows = (ph - 1) * qdim + src + (1 << j)
                cols = base + src
                h[rows, cols] += amp * weights[j]
                h[cols, rows] += amp * weights[j]
    return OperatorMatrix(h, _hamiltonian_basis(n, fock_cutoff), hermitian=True)


def build_excitation_number(
    config: ChainConfig, fock_cutoff: int, max_qubits: int = MAX_QUBITS
) -> OperatorMatrix:
    """Conserved excitation number S_z + a^dag a on the same basis as
    :func:`build_hamiltonian`."""
    if not isinstance(fock_cutoff, (int, np.integer)) or fock_cutoff < 0:
        raise InvalidParameterError(f"fock_cutoff must be an integer >= 0, got {fock_cutoff!r}")
    n = config.n_qubits
    qdim = 1 << n
    dim = qdim * (fock_cutoff + 1)
    _check_capacity(n, dim, max_qubits)
    pop = np.array([bin(b).count("1") for b in range(qdim)])
    diag = np.concatenate([pop - n / 2.0 + ph for ph in range(fock_cutoff + 1)])
    return OperatorMatrix(np.diag(diag.astype(complex)), _hamiltonian_basis(n, fock_cutoff), hermitian=True)


def sector_basis(config: ChainConfig, total_excitation) -> tuple[BasisLabel, ...]:
    """Basis states with S_z + a^dag a = u, photon-major order.

    The photon number in the sector never exceeds u + N/2, so the list
    is exact, not truncated.
    """
    n = config.n_qubits
    u2 = twice(total_excitation)
    n_max2 = u2 + n  # doubled value of u + N/2
    if n_max2 < 0 or n_max2 % 2 != 0:
        raise EmptySectorError(
            f"no basis states with excitation number {total_excitation!r} for {n} qubits"
        )
    n_max = n_max2 // 2
    labels = []
    for ph in range(n_max + 1):
        excited = n_max - ph  # popcount + photon = u + N/2
        if 0 <= excited <= n:
            labels.extend(
                BasisLabel(ph, format(b, f"0{n}b"))
                for b in range(1 << n)
                if bin(b).count("1") == excited
            )
    if not labels:
        raise EmptySectorError(
            f"no basis states with excitation number {total_excitation!r} for {n} qubits"
        )
    return tuple(labels)


def sector_hamiltonian(
    config: ChainConfig, total_excitation, max_qubits: int = MAX_QUBITS
) -> OperatorMatrix:
    """Hamiltonian restricted to one excitation sector (exact truncation)."""
    n = config.n_qubits
    _check_capacity(n, 1 << n, max_qubits)
    labels = sector_basis(config, total_excitation)
    index = {(lab.photon_number, lab.occupation): i for i, lab in enumerate(labels)}
    weights = config.coupling_profile()
    dim = len(labels)
    h = np.zeros((dim, dim), dtype=complex)
    for i, lab in enumerate(labels):
        ph, b = lab.photon_number, lab.occupation
        h[i, i] = config.qubit_freq * (lab.excited_count - n / 2.0) + config.photon_freq * ph
        if ph >= 1:
            amp = config.coupling * math.sqrt(ph)
            for j in range(n):
                if not (b >> j) & 1:
                    k = index[(ph - 1, b | (1 << j))]
                    h[k, i] += amp * weights[j]
                    h[i, k] += amp * weights[j]
    return OperatorMatrix(h, labels, hermitian=True)


def sector_spectrum(
    config: ChainConfig, total_excitation, max_qubits: int = MAX_QUBITS
) -> np.ndarray:
    """Ascending eigenvalues of the Hamiltonian on one excitation sector."""
    values, _ = eigh(sector_hamiltonian(config, total_excitation, max_qubits))
    return values


# ---------------------------------------------------------------------------
# In-house dense Hermitian eigensolver (cyclic complex Jacobi rotations)
# ---------------------------------------------------------------------------

JACOBI_OFF_TOL = 1e-14
JACOBI_MAX_SWEEPS = 100
SIGNIFICANT_COMPONENT = 1e-8


def _offdiag_norm(a: np.ndarray) -> float:
    # direct sum over off-diagonal entries; the ||A||^2 - ||diag||^2 shortcut
    # cancels catastrophically near convergence
    od = a.copy()
    np.fill_diagonal(od, 0.0)
    return float(np.linalg.norm(od))


def jacobi_eigh(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Sweeps row pairs in a fixed order until the off-diagonal Frobenius
    mass drops below 1e-14 * ||M||_F (at most 100 sweeps).  Returns
    ascending eigenvalues and orthonormal eigenvectors (columns), with a
    deterministic order inside degenerate clusters and each vector's
    first significant component made real positive.
    """
    a = np.array(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidParameterError(f"matrix must be square, got shape {a.shape}")
    n = a.shape[0]
    if np.abs(a - a.conj().T).max(initial=0.0) > HERMITICITY_TOL * max(1.0, np.abs(a).max(initial=0.0)):
        raise NotHermitianError("jacobi_eigh requires a Hermitian matrix")
    v = np.eye(n, dtype=complex)
    if n <= 1:
        return a.real.diagonal().copy(), v

    fro = float(np.linalg.norm(a))
    if fro == 0.0:
        return np.zeros(n), v
    # rotations below skip_tol cannot lift the off-diagonal mass above the
    # exit threshold, so skipping them is safe and saves late-sweep work
    skip_tol = JACOBI_OFF_TOL * fro / (2.0 * n)
    for _ in range(JACOBI_MAX_SWEEPS):
        if _offdiag_norm(a) <= JACOBI_OFF_TOL * fro:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= skip_tol:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                phase = apq / mag
                tau = (aqq - app) / (2.0 * mag)
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                s_phase = s * np.conj(phase)
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s_phase * col_q
                a[:, q] = s * col_p + c * np.conj(phase) * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - (s * phase) * row_q
                a[q, :] = s * row_p + (c * phase) * row_q
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                a[p, q] = 0.0
                a[q, p] = 0.0
                vcol_p = v[:, p].copy()
                vcol_q = v[:, q].copy()
                v[:, p] = c * vcol_p - s_phase * vcol_q
                v[:, q] = s * vcol_p + c * np.conj(phase) * vcol_q

    values = a.real.diagonal().copy()
    order = np.argsort(values, kind="stable")
    values = values[order]
    v = v[:, order]

    # deterministic order inside degenerate clusters: ascending index of the
    # first significant eigenvector component
    cluster_tol = 1e-12 * (1.0 + fro)
    first_sig = np.array(
        [int(np.argmax(np.abs(v[:, k]) > SIGNIFICANT_COMPONENT)) for k in range(n)]
    )
    start = 0
    while start < n:
        stop = start + 1
        while stop < n and values[stop] - values[stop - 1] <= cluster_tol:
            stop += 1
        if stop - start > 1:
            sub = start + np.argsort(first_sig[start:stop], kind="stable")
            v[:, start:stop] = v[:, sub]
            values[start:stop] = values[sub]
        start = stop

    # fix the free phase: first significant component real positive
    for k in range(n):
        lead = v[np.argmax(np.abs(v[:, k]) > SIGNIFICANT_COMPONENT), k]
        if abs(lead) > 0.0:
            v[:, k] *= np.conj(lead) / abs(lead)
    return values, v


def eigh(operator: OperatorMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of an :class:`OperatorMatrix` flagged hermitian."""
    if not operator.hermitian:
        raise NotHermitianError("operator is not flagged hermitian")
    return jacobi_eigh(operator.entries)
