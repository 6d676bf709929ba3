"""Distributional law of the area between a Levy-driven queue and its secondary-input version."""

from ._core import (
    HoldingFunction,
    JumpDistribution,
    LaplaceExponent,
    LevyAreaError,
    ProcessSpec,
    corr_area,
    cov_area_T,
    estimate,
    inverse_derivs_at_zero,
    joint_lst,
    joint_lst_fidi,
    longrun_average,
    lst_area,
    lst_two_level,
    mean_area,
    moments_area,
    multiclass_linear,
    optimal_order,
    revert_series,
    sample_excursion,
    var_area,
    verify,
)

__all__ = [
    "HoldingFunction",
    "JumpDistribution",
    "LaplaceExponent",
    "LevyAreaError",
    "ProcessSpec",
    "corr_area",
    "cov_area_T",
    "estimate",
    "inverse_derivs_at_zero",
    "joint_lst",
    "joint_lst_fidi",
    "longrun_average",
    "lst_area",
    "lst_two_level",
    "mean_area",
    "moments_area",
    "multiclass_linear",
    "optimal_order",
    "revert_series",
    "sample_excursion",
    "var_area",
    "verify",
]
