"""Physical parameters of one qubit-chain instance and half-integer helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError


def twice(x) -> int:
    """Return 2*x as an exact integer, rejecting anything that is not a
    half-integer.  Spin labels (r, m, u) are carried around as doubled
    integers so ladder arithmetic never touches floating-point indexing.
    """
    d = 2.0 * float(x)
    rounded = round(d)
    if not math.isfinite(d) or abs(d - rounded) > 1e-9:
        raise InvalidParameterError(f"{x!r} is not a half-integer")
    return int(rounded)


def halves(twice_x: int) -> float:
    """Inverse of :func:`twice`; exact for integers and half-integers."""
    return twice_x / 2.0


@dataclass(frozen=True)
class ChainConfig:
    """Parameters of a chain of two-level qubits coupled to one photon mode.

    Attributes
    ----------
    n_qubits : int
        Number of qubits N, at least 1.
    spacing : float
        Relative spacing l = 2*L_q/L_p of qubit interspacing to photon
        wavelength.  Qubit j couples with strength
        ``coupling * cos(j*pi*spacing)``; l = 0 is the homogeneous
        reference case and negative l mirrors the chain (identical
        operators), so any finite value is accepted here even though the
        scalar deformation ops demand l > 0.
    qubit_freq : float
        Level splitting of each qubit (hbar = c = 1).
    photon_freq : float
        Frequency of the photon mode.
    coupling : float
        Dipole coupling amplitude, >= 0.
    """

    n_qubits: int
    spacing: float
    qubit_freq: float = 1.0
    photon_freq: float = 1.0
    coupling: float = 0.0

    def __post_init__(self):
        if not isinstance(self.n_qubits, int) or self.n_qubits < 1:
            raise InvalidParameterError(f"n_qubits must be a positive integer, got {self.n_qubits!r}")
        if not math.isfinite(self.spacing):
            raise InvalidParameterError(f"spacing must be finite, got {self.spacing!r}")
        for name in ("qubit_freq", "photon_freq"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidParameterError(f"{name} must be finite")
        if not math.isfinite(self.coupling) or self.coupling < 0:
            raise InvalidParameterError(f"coupling must be finite and >= 0, got {self.coupling!r}")

    @property
    def detuning(self) -> float:
        """Photon-qubit detuning, always recomputed from the two frequencies."""
        return self.photon_freq - self.qubit_freq

    def coupling_profile(self) -> np.ndarray:
        """Per-qubit coupling factors cos(j*pi*l), j = 0..N-1."""
        j = np.arange(self.n_qubits)
        return np.cos(j * np.pi * self.spacing)
