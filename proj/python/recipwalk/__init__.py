"""Random walks with a hub trap on a reciprocity-weighted fractal network."""

from ._core import (
    Arc,
    MfptReport,
    SimReport,
    build_binary,
    build_weighted,
    growth_factor,
    lambda_min,
    mfpt_closed,
    p_matrix,
    scaling_exponent,
    scaling_fit,
    simulate,
    solve_trapping_times,
    spectrum,
    t_ext_closed,
    t_tot_closed,
)

__all__ = [
    "Arc",
    "MfptReport",
    "SimReport",
    "build_binary",
    "build_weighted",
    "growth_factor",
    "lambda_min",
    "mfpt_closed",
    "p_matrix",
    "scaling_exponent",
    "scaling_fit",
    "simulate",
    "solve_trapping_times",
    "spectrum",
    "t_ext_closed",
    "t_tot_closed",
]
