"""Stationary points of the deformation factor and the exciton crossover.

R(N, l) oscillates with the Dirichlet-kernel term sin((2N-1)*pi*l)/sin(pi*l);
its stationary points solve tan((2N-1)*pi*l) = (2N-1)*tan(pi*l).  The
crossover between localized (large l) and delocalized (small l) collective
excitations sits at the global minimum of R over (0, 1/2], which for large N
is the first negative lobe of the kernel near l ~ 1.43/(2N-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import deformation_profile
from .errors import InvalidParameterError

__all__ = [
    "CrossoverReport",
    "stationarity_residual",
    "chebyshev_residual",
    "bracketed_roots",
    "find_stationary_points",
    "crossover_point",
]

BISECT_WIDTH = 1e-12
DEDUPE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class CrossoverReport:
    """Location and depth of the deformation minimum for one chain size."""

    n_qubits: int
    crossover_spacing: float
    deformation_at_crossover: float
    spins_per_wavelength: float
    stationary_points: np.ndarray


def _validate_n(n_qubits) -> int:
    if not isinstance(n_qubits, (int, np.integer)) or n_qubits < 2:
        raise InvalidParameterError(
            f"n_qubits must be an integer >= 2 (R is constant for a single qubit), got {n_qubits!r}"
        )
    return int(n_qubits)


def stationarity_residual(n_qubits: int, spacing):
    """Pole-free stationarity function

        g(l) = sin((2N-1)*pi*l)*cos(pi*l) - (2N-1)*cos((2N-1)*pi*l)*sin(pi*l)

    whose zeros away from sin(pi*l) = 0 are exactly the stationary
    points of the deformation factor (g = -(4N/pi)*sin^2(pi*l)*R'(l)).
    Accepts scalars or arrays.
    """
    n = _validate_n(n_qubits)
    theta = np.pi * np.asarray(spacing, dtype=float)
    k = 2 * n - 1
    out = np.sin(k * theta) * np.cos(theta) - k * np.cos(k * theta) * np.sin(theta)
    return float(out) if np.isscalar(spacing) else out


def chebyshev_residual(n_qubits: int, spacing):
    """Chebyshev form U_{2N-1}(x) - 2N*T_{2N-1}(x) at x = cos(pi*l),
    evaluated by the stable three-term recurrence
    T_{k+1} = 2x*T_k - T_{k-1} (same for U, seeded U_1 = 2x).  Shares its
    zeros on (0, 1) with :func:`stationarity_residual`.
    """
    n = _validate_n(n_qubits)
    x = np.cos(np.pi * np.asarray(spacing, dtype=float))
    t_prev = np.ones_like(x)
    t_cur = x.copy()
    u_prev = np.ones_like(x)
    u_cur = 2.0 * x
    for _ in range(2 * n - 2):
        t_prev, t_cur = t_cur, 2.0 * x * t_cur - t_prev
        u_prev, u_cur = u_cur, 2.0 * x * u_cur - u_prev
    out = u_cur - 2.0 * n * t_cur
    return float(out) if np.isscalar(spacing) else out


def bracketed_roots(func, lo: float, hi: float, num_points: int) -> np.ndarray:
    """Roots of a vectorized scalar function on [lo, hi]: scan a uniform
    grid, bracket every sign change, bisect each bracket to width <=
    1e-12, polish with secant steps, and deduplicate within 1e-10.

    The secant polish matters for steep residuals (large N), where a
    1e-12 interval alone still leaves |f| far above rounding noise.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise InvalidParameterError(f"bad scan interval [{lo!r}, {hi!r}]")
    xs = np.linspace(lo, hi, max(int(num_points), 2))
    fs = np.asarray(func(xs), dtype=float)
    roots = [float(x) for x, f in zip(xs, fs) if f == 0.0]
    sign = np.sign(fs)
    idx = np.nonzero(sign[:-1] * sign[1:] < 0)[0]
    if idx.size:
        a = xs[idx].copy()
        b = xs[idx + 1].copy()
        fa = fs[idx].copy()
        fb = fs[idx + 1].copy()
        while np.max(b - a) > BISECT_WIDTH:
            mid = 0.5 * (a + b)
            fm = np.asarray(func(mid), dtype=float)
            take_left = fa * fm <= 0.0
            b = np.where(take_left, mid, b)
            fb = np.where(take_left, fm, fb)
            a = np.where(take_left, a, mid)
            fa = np.where(take_left, fa, fm)
        x = 0.5 * (a + b)
        for _ in range(4):
            df = fb - fa
            safe = df != 0.0
            x = np.where(safe, b - fb * (b - a) / np.where(safe, df, 1.0), x)
            x = np.clip(x, np.minimum(a, b), np.maximum(a, b))
            fx = np.asarray(func(x), dtype=float)
            root_on_left = fa * fx <= 0.0
            b = np.where(root_on_left, x, b)
            fb = np.where(root_on_left, fx, fb)
            a = np.where(root_on_left, a, x)
            fa = np.where(root_on_left, fa, fx)
        fa_abs = np.abs(np.asarray(func(a), dtype=float))
        fb_abs = np.abs(np.asarray(func(b), dtype=float))
        roots.extend(np.where(fa_abs <= fb_abs, a, b).tolist())
    roots.sort()
    deduped = []
    for root in roots:
        if not deduped or root - deduped[-1] > DEDUPE_TOL:
            deduped.append(root)
    return np.array(deduped)


def find_stationary_points(n_qubits: int, l_min: float, l_max: float) -> np.ndarray:
    """Sorted stationary points of R(N, l) on [l_min, l_max], found as
    sign changes of :func:`stationarity_residual` on a grid of step
    <= 1/(20*(2N-1)) (at least ~20 samples per oscillation of the fastest
    term) refined by bisection.
    """
    n = _validate_n(n_qubits)
    l_min = float(l_min)
    l_max = float(l_max)
    if not (0.0 < l_min < l_max) or not math.isfinite(l_max):
        raise InvalidParameterError(f"need 0 < l_min < l_max, got [{l_min!r}, {l_max!r}]")
    num = int(math.ceil((l_max - l_min) * 20 * (2 * n - 1))) + 1
    return bracketed_roots(lambda l: stationarity_residual(n, l), l_min, l_max, max(num, 50))


def crossover_point(n_qubits: int) -> CrossoverReport:
    """The crossover spacing l* of an N-qubit chain: the global minimizer
    of R over the stationary points in (0, 1/2].

    The scan starts below the first stationary point (~1.43/(2N-1)) and
    overshoots 1/2 by two grid steps so a boundary extremum at exactly
    l = 1/2 is still bracketed.
    """
    n = _validate_n(n_qubits)
    step = 1.0 / (20 * (2 * n - 1))
    lo = 0.1 / (2 * n - 1)
    hi = 0.5 + 2.0 * step
    points = find_stationary_points(n, lo, hi)
    points = points[points <= 0.5 + 1e-9]
    if points.size == 0:
        raise InvalidParameterError(f"no stationary points found in (0, 1/2] for N = {n}")
    values = deformation_profile(n, points)
    best = int(np.argmin(values))
    l_star = float(points[best])
    return CrossoverReport(
        n_qubits=n,
        crossover_spacing=l_star,
        deformation_at_crossover=float(values[best]),
        spins_per_wavelength=2.0 / l_star,
        stationary_points=points,
    )
