"""PT-symmetric Dirac-Weyl models in hyperbolic magnetic fields."""

from ._ptweyl import (
    IntertwinerCoeffs,
    InvalidModel,
    NUProblem,
    PtweylError,
    ScarfModel,
    SingularVelocity,
    bound_spectrum,
    cli,
    dirac_energy,
    eff_potential,
    run_check,
    solve_constraints,
    u_family,
)

__all__ = [
    "IntertwinerCoeffs",
    "InvalidModel",
    "NUProblem",
    "PtweylError",
    "ScarfModel",
    "SingularVelocity",
    "bound_spectrum",
    "cli",
    "dirac_energy",
    "eff_potential",
    "run_check",
    "solve_constraints",
    "u_family",
]
