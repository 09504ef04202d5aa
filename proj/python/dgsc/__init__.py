from ._dgsc import (
    SweepColumn,
    SweepResult,
    damping_time,
    frequencies,
    gauss_rule,
    legendre_deriv_eval,
    legendre_eval,
    nonphysical_roots,
    pade_defect,
    pade_pair,
    preset_names,
    radau_roots,
    run_decay,
    run_preset,
    single_run_errors,
)

__all__ = [
    "SweepColumn",
    "SweepResult",
    "damping_time",
    "frequencies",
    "gauss_rule",
    "legendre_deriv_eval",
    "legendre_eval",
    "nonphysical_roots",
    "pade_defect",
    "pade_pair",
    "preset_names",
    "radau_roots",
    "run_decay",
    "run_preset",
    "single_run_errors",
]
