"""Exception types shared across the package."""


class QChainError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(QChainError, ValueError):
    """A scalar argument is out of its documented domain."""


class CapacityError(QChainError):
    """Requested dense build exceeds the qubit-count cap."""


class DimensionMismatchError(QChainError, ValueError):
    """Two operators live on different bases."""


class NotHermitianError(QChainError, ValueError):
    """Eigensolver input lacks the hermitian flag or property."""


class ZeroDenominatorError(QChainError, ZeroDivisionError):
    """Projection denominator trace vanishes."""


class EmptySectorError(QChainError):
    """No basis states satisfy the excitation-sector constraint."""


class EmptySubspaceError(QChainError):
    """The (u, r) ladder subspace contains no valid configurations."""


class DegenerateLadderError(QChainError):
    """A ladder matrix element in a coefficient denominator vanishes."""


class PoleError(QChainError):
    """A scaled eigenvalue offset in a closed-form denominator vanishes."""


class NegativeRadicandError(QChainError):
    """A closed-form square root turned complex outside its regime."""
