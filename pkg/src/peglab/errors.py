"""Exception types shared across the package."""


class PegLabError(Exception):
    """Base class for all peglab errors."""


class InvalidGainError(PegLabError, ValueError):
    """Raised for non-positive or non-finite admittance gains."""


class NonFiniteError(PegLabError, ValueError):
    """Raised when an input that must be finite contains NaN or inf."""


class EpisodeDoneError(PegLabError, RuntimeError):
    """Raised when stepping an environment whose episode already ended."""


class EmptySequenceError(PegLabError, ValueError):
    """Raised when an operation requires a non-empty sequence."""


class WindowIndexError(PegLabError, IndexError):
    """Raised when a window is requested outside the trajectory range."""


class ShapeMismatchError(PegLabError, ValueError):
    """Raised when model inputs do not match the configured dimensions."""


class TrainingDivergedError(PegLabError, RuntimeError):
    """Raised when a training loss becomes NaN or inf."""
