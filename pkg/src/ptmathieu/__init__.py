"""Spectra, exceptional points and phase boundaries of the PT-symmetric deformed Mathieu operator."""

from .eig import (
    DEFAULT_LEVELS,
    DEFAULT_TOL_IM,
    ConvergenceError,
    PairingError,
    Spectrum,
    classify_real,
    converged_spectrum,
    eigenvalues,
    multiset_distance,
    sort_by_level,
)
from .estimators import ExceptionalLineTracer, PowerLawFit, SpectrumSolver
from .fit import FitResult, power_law_fit
from .model import (
    DEFAULT_TRUNCATION,
    Basis,
    BoundaryCondition,
    ModelParams,
    OperatorMatrix,
    assemble_matrix,
    cosine_coupling,
    potential_value,
    sine_coupling,
)
from .oracle import (
    ShootResult,
    fd_matrix,
    fd_richardson,
    fd_spectrum,
    refine_eigenvalue,
    shoot,
    shoot_residual,
)
from .phase import (
    DominanceReport,
    ExceptionalLine,
    Side,
    compare_bc_stability,
    critical_delta,
    critical_q,
    trace_exceptional_line,
)
from .sweep import (
    CoalescenceEvent,
    Direction,
    LevelCurve,
    SweepParameter,
    detect_coalescence,
    real_intervals,
    sweep_levels,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BoundaryCondition",
    "CoalescenceEvent",
    "ConvergenceError",
    "DEFAULT_LEVELS",
    "DEFAULT_TOL_IM",
    "DEFAULT_TRUNCATION",
    "Direction",
    "DominanceReport",
    "ExceptionalLine",
    "ExceptionalLineTracer",
    "FitResult",
    "LevelCurve",
    "ModelParams",
    "OperatorMatrix",
    "PairingError",
    "PowerLawFit",
    "ShootResult",
    "Side",
    "Spectrum",
    "SpectrumSolver",
    "SweepParameter",
    "assemble_matrix",
    "classify_real",
    "compare_bc_stability",
    "converged_spectrum",
    "cosine_coupling",
    "critical_delta",
    "critical_q",
    "detect_coalescence",
    "eigenvalues",
    "fd_matrix",
    "fd_richardson",
    "fd_spectrum",
    "multiset_distance",
    "potential_value",
    "power_law_fit",
    "real_intervals",
    "refine_eigenvalue",
    "shoot",
    "shoot_residual",
    "sine_coupling",
    "sort_by_level",
    "sweep_levels",
    "trace_exceptional_line",
]
