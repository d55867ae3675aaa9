"""Branches of the dilogarithm, their zeros, and polylogarithm zero sets."""

from .branch import BranchIndex, MonodromyElement, phi, phi_derivative, phi_eval
from .errors import (
    ConvergenceError,
    DomainError,
    InconclusiveError,
    NewtonStepError,
    UnsupportedBranchError,
)
from .special_fn import KAPPA, EvalResult, clausen, li2, li2_principal
from .zero_finder import ZeroCertificate, find_zero, has_zero, initial_guess, polar_rectangle

__all__ = [
    "BranchIndex",
    "MonodromyElement",
    "phi",
    "phi_derivative",
    "phi_eval",
    "ConvergenceError",
    "DomainError",
    "InconclusiveError",
    "NewtonStepError",
    "UnsupportedBranchError",
    "KAPPA",
    "EvalResult",
    "clausen",
    "li2",
    "li2_principal",
    "ZeroCertificate",
    "find_zero",
    "has_zero",
    "initial_guess",
    "polar_rectangle",
]
