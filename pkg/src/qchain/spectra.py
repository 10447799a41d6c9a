"""Diagonalization of the deformed collective model in one (u, r) subspace.

The interaction part couples photon-number configurations |n; r, u-n>
through the deformed ladder elements, giving a real symmetric
tridiagonal matrix.  Alongside the eigensolve this module carries the
coefficient recursion, its combinatorial closed form, the characteristic
polynomial, and the 4-qubit special-case formulas, each of which serves
as an independent route to the same spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

import numpy as np

from .algebra import ladder_element, undeformed_ladder_element
from .config import halves, twice
from .errors import (
    DegenerateLadderError,
    EmptySubspaceError,
    InvalidParameterError,
    NegativeRadicandError,
    PoleError,
)
from .oracle import jacobi_eigh

__all__ = [
    "Normalization",
    "ExcitationSubspace",
    "DressedState",
    "ResonantLevels",
    "subspace",
    "build_h1_matrix",
    "solve_dressed",
    "rescale_to_c0",
    "coefficients_recursive",
    "coefficients_closed",
    "characteristic_polynomial",
    "truncated_quartic_coefficients",
    "weak_coupling_energies",
    "resonant_energies",
    "four_qubit_reference_coefficients",
]


class Normalization(Enum):
    C0_IS_ONE = "c0_is_one"
    UNIT_NORM = "unit_norm"


@dataclass(frozen=True)
class ExcitationSubspace:
    """Ladder basis {|n; r, u-n>} of one excitation sector at fixed total spin.

    Photon numbers run from max(0, u-r) to u+r so that the moment
    m = u - n always satisfies -r <= m <= r.
    """

    total_excitation: float
    total_spin: float
    photon_numbers: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.photon_numbers)

    @property
    def moments(self) -> tuple[float, ...]:
        return tuple(self.total_excitation - n for n in self.photon_numbers)

    @property
    def labels(self) -> tuple[tuple[int, float, float], ...]:
        """Ordered (photon_number, total_spin, moment) triples."""
        return tuple(
            (n, self.total_spin, self.total_excitation - n) for n in self.photon_numbers
        )


@dataclass(frozen=True, eq=False)
class DressedState:
    """One eigenpair of the subspace interaction matrix.

    ``coefficients[k]`` multiplies the configuration with photon number
    ``photon_numbers[k]``; ``total_energy`` = qubit_freq * u + v.
    """

    interaction_eigenvalue: float
    coefficients: np.ndarray
    normalization: Normalization
    total_energy: float


@dataclass(frozen=True, eq=False)
class ResonantLevels:
    """Zero-detuning interaction eigenvalues of the 4-qubit one-excitation
    ladder.

    ``canonical`` holds the eigensolver values, which coincide with
    +-sqrt((15 +- 3*sqrt(17))*R)*eta, the roots of
    v^4 - 30*R*eta^2*v^2 + 72*R^2*eta^4.  ``alternate`` holds
    +-sqrt((15 + 3*sqrt(33))*R)*eta, the real roots obtained when the
    constant term's sign is flipped to -72*R^2*eta^4; it is retained for
    comparison output only.
    """

    canonical: np.ndarray
    alternate: np.ndarray


def _validate_r(deformation) -> float:
    r = float(deformation)
    if not math.isfinite(r) or not 0.0 < r <= 1.0:
        raise InvalidParameterError(f"deformation must lie in (0, 1], got {r!r}")
    return r


def subspace(total_excitation, total_spin) -> ExcitationSubspace:
    """The (u, r) ladder subspace.

    Raises
    ------
    EmptySubspaceError
        If u < -r, or if u - r is not an integer (no photon number can
        then produce a valid moment).
    """
    u2 = twice(total_excitation)
    r2 = twice(total_spin)
    if r2 < 0:
        raise InvalidParameterError(f"total_spin must be >= 0, got {total_spin!r}")
    if u2 < -r2:
        raise EmptySubspaceError(f"u = {total_excitation!r} lies below -r = {halves(-r2)!r}")
    if (u2 - r2) % 2 != 0:
        raise EmptySubspaceError(
            f"u - r must be an integer, got u = {total_excitation!r}, r = {total_spin!r}"
        )
    n_lo = max(0, (u2 - r2) // 2)
    n_hi = (u2 + r2) // 2
    return ExcitationSubspace(
        total_excitation=halves(u2),
        total_spin=halves(r2),
        photon_numbers=tuple(range(n_lo, n_hi + 1)),
    )


def build_h1_matrix(sub: ExcitationSubspace, deformation, detuning, coupling) -> np.ndarray:
    """Interaction matrix w~_0 * a^dag a + eta*(S+ a + S- a^dag) on the
    subspace basis: diagonal w~_0 * n, off-diagonal between n and n+1
    equal to eta * sqrt(n+1) * alpha_{u-n-1}^(r).
    """
    R = _validate_r(deformation)
    u = sub.total_excitation
    r = sub.total_spin
    ns = np.asarray(sub.photon_numbers)
    h = np.diag(float(detuning) * ns.astype(float))
    for k, n in enumerate(ns[:-1]):
        amp = float(coupling) * math.sqrt(n + 1) * ladder_element(r, u - n - 1, R).value
        h[k, k + 1] = amp
        h[k + 1, k] = amp
    return h


def solve_dressed(
    sub: ExcitationSubspace, deformation, detuning, coupling, qubit_freq: float = 0.0
) -> list[DressedState]:
    """All dressed states of the subspace, unit-norm coefficients, ordered
    by ascending interaction eigenvalue.  Pass ``qubit_freq`` to obtain
    absolute total energies E = w_q * u + v.
    """
    h = build_h1_matrix(sub, deformation, detuning, coupling)
    values, vectors = jacobi_eigh(h)
    return [
        DressedState(
            interaction_eigenvalue=float(values[k]),
            coefficients=vectors[:, k].real.copy(),
            normalization=Normalization.UNIT_NORM,
            total_energy=float(qubit_freq) * sub.total_excitation + float(values[k]),
        )
        for k in range(sub.dim)
    ]


def rescale_to_c0(state: DressedState, sub: ExcitationSubspace) -> DressedState:
    """Rescale a dressed state so the n = 0 component is exactly 1."""
    if sub.photon_numbers[0] != 0:
        raise InvalidParameterError("photon number 0 is not part of this subspace")
    c0 = state.coefficients[0]
    if c0 == 0.0:
        raise DegenerateLadderError("n = 0 component vanishes; cannot rescale")
    coeffs = state.coefficients / c0
    coeffs[0] = 1.0
    return DressedState(
        interaction_eigenvalue=state.interaction_eigenvalue,
        coefficients=coeffs,
        normalization=Normalization.C0_IS_ONE,
        total_energy=state.total_energy,
    )


def _scaled_offsets(v, detuning, coupling, count):
    """vt_n = (v - detuning*n)/coupling for n = 0..count-1."""
    eta = float(coupling)
    if eta <= 0.0:
        raise InvalidParameterError(f"coupling must be > 0, got {coupling!r}")
    return np.array([(float(v) - float(detuning) * n) / eta for n in range(count)])


def _require_c0(sub: ExcitationSubspace):
    if sub.photon_numbers[0] != 0:
        raise InvalidParameterError(
            "coefficient formulas require photon number 0 in the subspace (u <= r)"
        )


def coefficients_recursive(v, sub: ExcitationSubspace, deformation, detuning, coupling) -> np.ndarray:
    """Configuration amplitudes c_n with c_0 = 1 by the three-term
    recursion

        C_{n+1} = vt_n * C_n - n * alpha_{u-n}^2 * C_{n-1},
        c_n = C_n / (sqrt(n!) * prod_{j=1..n} alpha_{u-j}),

    where vt_n = (v - detuning*n)/coupling.  When v is an eigenvalue of
    the subspace matrix, C_{n_max+1} vanishes (the terminating condition).
    """
    R = _validate_r(deformation)
    _require_c0(sub)
    u = sub.total_excitation
    r = sub.total_spin
    n_max = sub.photon_numbers[-1]
    vt = _scaled_offsets(v, detuning, coupling, n_max + 1)
    big_c = np.empty(n_max + 1)
    big_c[0] = 1.0
    if n_max >= 1:
        big_c[1] = vt[0]
    for n in range(1, n_max):
        alpha_sq = R * (r - (u - n)) * (r + (u - n) + 1)
        big_c[n + 1] = vt[n] * big_c[n] - n * alpha_sq * big_c[n - 1]
    c = np.empty(n_max + 1)
    c[0] = 1.0
    denom = 1.0
    for n in range(1, n_max + 1):
        step = ladder_element(r, u - n, R).value
        if step == 0.0:
            raise DegenerateLadderError(f"alpha_(u-{n}) vanishes; transform undefined")
        denom *= math.sqrt(n) * step
        c[n] = big_c[n] / denom
    return c


def _descending_index_sets(n: int, p: int):
    """Index sets {j_1 > ... > j_p} in [0, n-2] with gaps >= 2."""
    if p == 0:
        yield ()
        return
    for combo in combinations(range(n - 1), p):
        if all(b - a >= 2 for a, b in zip(combo, combo[1:])):
            yield tuple(reversed(combo))


def coefficients_closed(v, sub: ExcitationSubspace, deformation, detuning, coupling) -> np.ndarray:
    """Configuration amplitudes by the combinatorial closed form

        c_n = sum_{p=0}^{floor(n/2)} (-1)^p R^{p - n/2} * K_{n,p},

    where K_{n,p} builds on the undeformed ladder elements
    abar_{u-(j+1)} through P_n = prod_j vt_j / abar_{u-(j+1)} and a sum
    over descending non-adjacent index tuples, each contributing
    prod_k (j_k+1) * abar_{u-(j_k+1)}^2 / (vt_{j_k} * vt_{j_k+1}).

    The expression genuinely has poles at vt_j = 0; those raise
    :class:`PoleError` instead of returning huge values.
    """
    R = _validate_r(deformation)
    _require_c0(sub)
    u = sub.total_excitation
    r = sub.total_spin
    n_max = sub.photon_numbers[-1]
    vt = _scaled_offsets(v, detuning, coupling, n_max + 1)
    pole_tol = 1e-12 * max(1.0, abs(float(v)) / float(coupling))

    abar = np.array([undeformed_ladder_element(r, u - j - 1) for j in range(n_max)])
    c = np.empty(n_max + 1)
    c[0] = 1.0
    prefactor = 1.0  # running P_n / sqrt(n!)
    for n in range(1, n_max + 1):
        if n >= 2:
            bad = [j for j in range(n) if abs(vt[j]) < pole_tol]
            if bad:
                raise PoleError(f"vt_{bad[0]} = {vt[bad[0]]!r} sits on a pole of the closed form")
        prefactor *= vt[n - 1] / (abar[n - 1] * math.sqrt(n))
        total = 0.0
        for p in range(n // 2 + 1):
            tuple_sum = 0.0
            for idx in _descending_index_sets(n, p):
                term = 1.0
                for j in idx:
                    term *= (j + 1) * abar[j] ** 2 / (vt[j] * vt[j + 1])
                tuple_sum += term
            total += (-1.0) ** p * R ** (p - n / 2.0) * tuple_sum
        c[n] = prefactor * total
    return c


def characteristic_polynomial(sub: ExcitationSubspace, deformation, detuning, coupling) -> np.ndarray:
    """Monic characteristic polynomial of the subspace interaction matrix,
    ascending coefficient order (numpy polynomial convention), obtained by
    running the three-term recursion with symbolic v.  Its roots are the
    interaction eigenvalues.
    """
    R = _validate_r(deformation)
    u = sub.total_excitation
    r = sub.total_spin
    ns = sub.photon_numbers
    eta = float(coupling)
    dw = float(detuning)
    prev = np.array([1.0])  # p_0
    cur = np.array([-dw * ns[0], 1.0])  # v - diagonal_0
    for k in range(1, len(ns)):
        n = ns[k]
        off = eta * math.sqrt(n) * ladder_element(r, u - n, R).value
        shifted = np.concatenate(([0.0], cur)) - dw * n * np.concatenate((cur, [0.0]))
        nxt = shifted - off * off * np.concatenate((prev, [0.0, 0.0]))
        prev, cur = cur, nxt
    return cur


def truncated_quartic_coefficients(deformation, detuning, coupling) -> np.ndarray:
    """Weak-coupling quartic v^4 - 6*dw*v^3 + 11*dw^2*v^2 - 6*dw^3*v
    - 36*R*eta^2*dw^2, ascending order.  Its exact roots are the
    weak-coupling energies minus qubit_freq.
    """
    R = _validate_r(deformation)
    dw = float(detuning)
    eta = float(coupling)
    return np.array([-36.0 * R * eta**2 * dw**2, -6.0 * dw**3, 11.0 * dw**2, -6.0 * dw, 1.0])


def weak_coupling_energies(deformation, detuning, coupling, qubit_freq) -> np.ndarray:
    """The four weak-coupling total energies of the 4-qubit one-excitation
    ladder, ascending::

        E = w_q + (3/2)*dw +- (1/2)*sqrt(5*dw^2 +- 4*dw*sqrt(dw^2 + 36*R*eta^2))

    These are exactly the roots of :func:`truncated_quartic_coefficients`
    shifted by w_q; they track the exact spectrum only at leading order
    in eta/dw.
    """
    R = _validate_r(deformation)
    dw = float(detuning)
    if dw == 0.0:
        raise InvalidParameterError("weak-coupling form requires nonzero detuning")
    eta = float(coupling)
    inner = math.sqrt(dw * dw + 36.0 * R * eta * eta)
    energies = []
    for outer_sign in (-1.0, 1.0):
        for inner_sign in (-1.0, 1.0):
            radicand = 5.0 * dw * dw + inner_sign * 4.0 * dw * inner
            if radicand < 0.0:
                raise NegativeRadicandError(
                    f"sign combination ({outer_sign:+.0f}, {inner_sign:+.0f}) "
                    f"gives radicand {radicand!r}"
                )
            energies.append(float(qubit_freq) + 1.5 * dw + outer_sign * 0.5 * math.sqrt(radicand))
    return np.sort(np.array(energies))


def resonant_energies(deformation, coupling) -> ResonantLevels:
    """Zero-detuning interaction eigenvalues of the (u=1, r=2) subspace.

    The canonical values come from the eigensolver and equal
    +-sqrt((15 +- 3*sqrt(17))*R)*eta; the ``alternate`` pair is the
    sign-flipped-quartic closed form kept for comparison reports.
    """
    R = float(deformation)
    eta = float(coupling)
    if not math.isfinite(R) or not 0.0 <= R <= 1.0:
        raise InvalidParameterError(f"deformation must lie in [0, 1], got {deformation!r}")
    if not math.isfinite(eta) or eta < 0.0:
        raise InvalidParameterError(f"coupling must be >= 0, got {coupling!r}")
    if R == 0.0 or eta == 0.0:
        canonical = np.zeros(4)
    else:
        h = build_h1_matrix(subspace(1, 2), R, 0.0, eta)
        canonical, _ = jacobi_eigh(h)
    mag = math.sqrt((15.0 + 3.0 * math.sqrt(33.0)) * R) * eta
    return ResonantLevels(canonical=np.asarray(canonical), alternate=np.array([-mag, mag]))


def four_qubit_reference_coefficients(v, deformation, detuning, coupling) -> dict:
    """Closed-form amplitudes of the (u=1, r=2) ladder at eigenvalue v,
    as explicit formulas in vt_n = (v - detuning*n)/coupling::

        c1 = vt0 / sqrt(6R)
        c2 = vt0*vt1 / (6*sqrt(2)*R) - 1/sqrt(2)
        c3 = vt0*vt1*vt2 / (12*sqrt(6)*R^(3/2))
             - sqrt(6)*(vt2 + 2*vt0) / (12*sqrt(R))

    ``c3_variant`` replaces sqrt(6)*vt2 by vt2 in the second term of c3;
    it disagrees with the recursion and the eigenvectors and is kept for
    comparison output only.
    """
    R = _validate_r(deformation)
    vt = _scaled_offsets(v, detuning, coupling, 3)
    c1 = vt[0] / math.sqrt(6.0 * R)
    c2 = vt[0] * vt[1] / (6.0 * math.sqrt(2.0) * R) - 1.0 / math.sqrt(2.0)
    lead = vt[0] * vt[1] * vt[2] / (12.0 * math.sqrt(6.0) * R**1.5)
    c3 = lead - math.sqrt(6.0) * (vt[2] + 2.0 * vt[0]) / (12.0 * math.sqrt(R))
    c3_variant = lead - (vt[2] + 2.0 * math.sqrt(6.0) * vt[0]) / (12.0 * math.sqrt(R))
    return {"c1": c1, "c2": c2, "c3": c3, "c3_variant": c3_variant}
