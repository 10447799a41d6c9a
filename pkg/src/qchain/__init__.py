"""Excitation spectra of a qubit chain inhomogeneously coupled to one
photon mode, via a deformed collective-spin algebra, with an exact
dense-diagonalization oracle for every closed form."""

from .algebra import (
    DeformationFactor,
    LadderElement,
    bloch_metric,
    casimir_h,
    deformation_factor,
    deformation_factor_closed,
    deformation_profile,
    h_curve,
    ladder_element,
    sigma_z_deviation_weights,
    undeformed_ladder_element,
)
from .config import ChainConfig
from .crossover import (
    CrossoverReport,
    chebyshev_residual,
    crossover_point,
    find_stationary_points,
    stationarity_residual,
)
from .errors import (
    CapacityError,
    DegenerateLadderError,
    DimensionMismatchError,
    EmptySectorError,
    EmptySubspaceError,
    InvalidParameterError,
    NegativeRadicandError,
    NotHermitianError,
    PoleError,
    QChainError,
    ZeroDenominatorError,
)
from .oracle import (
    BasisLabel,
    CollectiveOps,
    OperatorMatrix,
    build_collective_ops,
    build_excitation_number,
    build_hamiltonian,
    commutator,
    eigh,
    hs_projection,
    jacobi_eigh,
    sector_spectrum,
)
from .spectra import (
    DressedState,
    ExcitationSubspace,
    Normalization,
    ResonantLevels,
    build_h1_matrix,
    characteristic_polynomial,
    coefficients_closed,
    coefficients_recursive,
    four_qubit_reference_coefficients,
    rescale_to_c0,
    resonant_energies,
    solve_dressed,
    subspace,
    truncated_quartic_coefficients,
    weak_coupling_energies,
)

__version__ = "0.1.0"
