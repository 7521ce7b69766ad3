from .config import settings
from .exceptions import (
    BracketError,
    ConvergenceError,
    CutoffTooLargeError,
    GridError,
    HeunWellError,
    InsufficientDecayError,
    OverflowUnrecoverableError,
    ParameterDomainError,
    PoleError,
    RootValidityError,
    SolverError,
    StepTooCoarseError,
)

__all__ = [
    "settings",
    "HeunWellError",
    "ParameterDomainError",
    "PoleError",
    "GridError",
    "ConvergenceError",
    "RootValidityError",
    "InsufficientDecayError",
    "SolverError",
    "CutoffTooLargeError",
    "OverflowUnrecoverableError",
    "StepTooCoarseError",
    "BracketError",
]
