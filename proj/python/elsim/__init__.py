"""Spectral Ericksen-Leslie simulator: python interface to the C++ core."""

from ._core import (  # noqa: F401
    FrankConstants,
    build_lambda,
    check,
    energy_density,
    energy_density_tensor_form,
    energy_deriv_S,
    energy_deriv_h,
    hat,
    one_constant_density,
    run_from_json,
    sweep_from_json,
    validate_leslie,
    vee,
    young_transform,
)

__all__ = [
    "FrankConstants",
    "build_lambda",
    "check",
    "energy_density",
    "energy_density_tensor_form",
    "energy_deriv_S",
    "energy_deriv_h",
    "hat",
    "one_constant_density",
    "run_from_json",
    "sweep_from_json",
    "validate_leslie",
    "vee",
    "young_transform",
]
