"""Entanglement of photon-added coherent state superpositions.

Closed-form overlaps and two-qubit embedding, Wootters concurrence under a
depolarizing channel, critical-probability analysis, and an independent
truncated-Fock-space oracle for cross-checking every closed form.
"""

from . import fock
from .analysis import (
    Axis,
    FitResult,
    SweepGrid,
    SweepResult,
    fit_gaussian,
    fit_tanh,
    p_critical,
    spec_concurrence,
    sweep,
)
from .embedding import (
    BasisConstants,
    QubitCoefficients,
    SuperpositionSpec,
    basis_constants,
    branch_overlaps,
    qubit_coefficients,
)
from .entanglement import (
    FULL_MIXING,
    check_density_matrix,
    concurrence_mixed,
    concurrence_pure,
    concurrence_x_state,
    depolarize,
)
from .errors import (
    BracketError,
    ConvergenceError,
    DegenerateSpecError,
    GridError,
    NumericalFailureError,
    PacsentError,
    RangeError,
    RankViolationError,
    TruncationError,
    XShapeError,
)
from .specfun import ScaledComplex, laguerre, log_gamma, pacs_overlap, regularized_1f1

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "BasisConstants",
    "BracketError",
    "ConvergenceError",
    "DegenerateSpecError",
    "FULL_MIXING",
    "FitResult",
    "GridError",
    "NumericalFailureError",
    "PacsentError",
    "QubitCoefficients",
    "RangeError",
    "RankViolationError",
    "ScaledComplex",
    "SuperpositionSpec",
    "SweepGrid",
    "SweepResult",
    "TruncationError",
    "XShapeError",
    "basis_constants",
    "branch_overlaps",
    "check_density_matrix",
    "concurrence_mixed",
    "concurrence_pure",
    "concurrence_x_state",
    "depolarize",
    "fit_gaussian",
    "fit_tanh",
    "fock",
    "laguerre",
    "log_gamma",
    "p_critical",
    "pacs_overlap",
    "qubit_coefficients",
    "regularized_1f1",
    "spec_concurrence",
    "sweep",
]
