"""Closed-form scalar machinery of the deformed collective-spin algebra.

The inhomogeneous couplings cos(j*pi*l) turn the collective ladder
commutator into [S+, S-] = 2*R*S_z with a scalar deformation factor
R in [1/N, 1].  Everything in this module is a pure function of plain
scalars; the dense-matrix counterparts live in :mod:`qchain.oracle`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import halves, twice
from .errors import InvalidParameterError

__all__ = [
    "DeformationFactor",
    "LadderElement",
    "deformation_factor",
    "deformation_factor_closed",
    "deformation_profile",
    "sigma_z_deviation_weights",
    "ladder_element",
    "undeformed_ladder_element",
    "casimir_h",
    "bloch_metric",
    "h_curve",
]


@dataclass(frozen=True)
class DeformationFactor:
    """Scalar deformation factor with the route that produced it.

    ``provenance`` is "sum" for the canonical cosine-sum evaluation and
    "closed" for the Dirichlet-ratio form, which is singular at integer
    spacing and kept only for cross-checks.
    """

    value: float
    n_qubits: int
    spacing: float
    provenance: str = "sum"

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class LadderElement:
    """One off-diagonal matrix element of the deformed ladder operators.

    ``value`` is alpha_m^(r) = sqrt(R*(r-m)*(r+m+1)), the amplitude with
    which S+ connects |r, m> to |r, m+1>.
    """

    total_spin: float
    moment: float
    deformation: float
    value: float


def _validate_nl(n_qubits, spacing):
    if not isinstance(n_qubits, (int, np.integer)) or n_qubits < 1:
        raise InvalidParameterError(f"n_qubits must be a positive integer, got {n_qubits!r}")
    spacing = float(spacing)
    if not math.isfinite(spacing) or spacing <= 0:
        raise InvalidParameterError(f"spacing must be finite and > 0, got {spacing!r}")
    return int(n_qubits), spacing


def deformation_factor(n_qubits: int, spacing: float) -> DeformationFactor:
    """Deformation factor R of an N-qubit chain at relative spacing l.

    Canonical sum form::

        R = 1/2 + (1/2N) * sum_{j=0}^{N-1} cos(2*j*pi*l)

    which is smooth in l (no removable singularity at integer l) and
    exactly periodic with period 1.  Bounds: 1/N <= R <= 1.
    """
    n, l = _validate_nl(n_qubits, spacing)
    j = np.arange(n)
    value = 0.5 + float(np.cos(2.0 * np.pi * l * j).sum()) / (2.0 * n)
    return DeformationFactor(value=value, n_qubits=n, spacing=l)


def deformation_profile(n_qubits: int, spacings) -> np.ndarray:
    """Sum-form deformation factor evaluated on an array of spacings.

    Same formula as :func:`deformation_factor`, vectorized for sweeps and
    stationary-point scans; spacings must be finite and > 0.
    """
    if not isinstance(n_qubits, (int, np.integer)) or n_qubits < 1:
        raise InvalidParameterError(f"n_qubits must be a positive integer, got {n_qubits!r}")
    ls = np.asarray(spacings, dtype=float)
    if ls.size and (not np.isfinite(ls).all() or (ls <= 0).any()):
        raise InvalidParameterError("spacings must be finite and > 0")
    j = np.arange(int(n_qubits))
    return 0.5 + np.cos(2.0 * np.pi * np.multiply.outer(ls, j)).sum(axis=-1) / (2.0 * n_qubits)


def deformation_factor_closed(n_qubits: int, spacing: float) -> DeformationFactor:
    """Dirichlet-ratio form of the deformation factor::

        R = [2N + 1 + sin((2N-1)*pi*l) / sin(pi*l)] / (4N)

    Equal to the sum form wherever sin(pi*l) != 0; the 0/0 limit at
    integer l is NOT handled, so callers must stay away from integers.
    """
    n, l = _validate_nl(n_qubits, spacing)
    ratio = math.sin((2 * n - 1) * math.pi * l) / math.sin(math.pi * l)
    value = (2 * n + 1 + ratio) / (4.0 * n)
    return DeformationFactor(value=value, n_qubits=n, spacing=l, provenance="closed")


def sigma_z_deviation_weights(n_qubits: int, spacing: float) -> np.ndarray:
    """Weights w_j = sin(j*pi*(1+l)) * sin(j*pi*(1-l)) of the extra
    single-qubit sigma_z terms in the ladder commutator:
    [S+, S-] = 2*(S_z + sum_j w_j sigma_{j,z}).

    Equivalently w_j = (cos(2*j*pi*l) - 1) / 2; all w_j vanish at
    integer l, recovering the undeformed algebra.
    """
    n, l = _validate_nl(n_qubits, spacing)
    j = np.arange(n)
    return np.sin(j * np.pi * (1.0 + l)) * np.sin(j * np.pi * (1.0 - l))


def _validate_deformation(deformation) -> float:
    r = float(deformation)
    if not math.isfinite(r) or not 0.0 < r <= 1.0:
        raise InvalidParameterError(f"deformation must lie in (0, 1], got {r!r}")
    return r


def ladder_element(total_spin, moment, deformation) -> LadderElement:
    """Deformed ladder element alpha_m^(r) = sqrt(R*(r-m)*(r+m+1)).

    Conventions: S+|r,m> = alpha_m^(r) |r,m+1> and
    S-|r,m> = alpha_{m-1}^(r) |r,m-1>, so alpha_r^(r) = 0 at the top of
    the ladder.  r and m must be half-integers with -r <= m <= r and
    r - m integral.
    """
    r2 = twice(total_spin)
    m2 = twice(moment)
    R = _validate_deformation(deformation)
    if r2 < 0:
        raise InvalidParameterError(f"total_spin must be >= 0, got {total_spin!r}")
    if not -r2 <= m2 <= r2:
        raise InvalidParameterError(f"moment {moment!r} outside [-r, r] for r = {total_spin!r}")
    if (r2 - m2) % 2 != 0:
        raise InvalidParameterError(f"r - m must be an integer, got r = {total_spin!r}, m = {moment!r}")
    # (r - m)(r + m + 1) in exact integer arithmetic on doubled indices
    product = (r2 - m2) * (r2 + m2 + 2) // 4
    return LadderElement(
        total_spin=halves(r2),
        moment=halves(m2),
        deformation=R,
        value=math.sqrt(R * product),
    )


def undeformed_ladder_element(total_spin, moment) -> float:
    """Textbook SU(2) element sqrt((r-m)*(r+m+1)), i.e. R = 1."""
    return ladder_element(total_spin, moment, 1.0).value


def casimir_h(moment, deformation) -> float:
    """Scalar part h(m) = R*(m^2 + m) of the deformed Casimir operator
    C = S-S+ + h(S_z).  Minimum over real m is -R/4 at m = -1/2.
    """
    m2 = twice(moment)
    R = _validate_deformation(deformation)
    return R * (m2 * m2 + 2 * m2) / 4.0


def bloch_metric(deformation) -> tuple[float, float, float]:
    """Metric (1, 1, R) of the deformed Bloch ellipsoid; R = 1 gives the
    unit sphere of the homogeneous case.
    """
    R = _validate_deformation(deformation)
    return (1.0, 1.0, R)


def h_curve(deformation, m_min, m_max, steps: int) -> list[tuple[float, float]]:
    """Uniform samples of the parabola h(m) = R*(m^2 + m) on [m_min, m_max],
    for plotting the level structure.  Requires steps >= 2 and a
    nonempty range.
    """
    R = _validate_deformation(deformation)
    m_min = float(m_min)
    m_max = float(m_max)
    if not (math.isfinite(m_min) and math.isfinite(m_max)) or m_min >= m_max:
        raise InvalidParameterError(f"empty moment range [{m_min!r}, {m_max!r}]")
    if not isinstance(steps, (int, np.integer)) or steps < 2:
        raise InvalidParameterError(f"steps must be an integer >= 2, got {steps!r}")
    ms = np.linspace(m_min, m_max, int(steps))
    hs = R * (ms * ms + ms)
    return list(zip(ms.tolist(), hs.tolist()))
