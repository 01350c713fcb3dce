"""Exponential two-level model with complex coupling: analytic propagator, numerical oracle, spectra."""

import json

from ._nikitin import (
    AccuracyError,
    ConfigError,
    DegeneracyError,
    DomainError,
    ExponentOverflowError,
    ModelParams,
    __version__,
    amplitudes,
    derived_params,
    eigenvalues,
    eigenvalues_closed_form,
    hamiltonian,
    kummer_m,
    ln_gamma,
    numerical_propagator,
    omega_integral,
    populations,
    propagator,
    rabi_closed_form,
    rabi_oracle,
    selftest,
    tricomi_u,
    wronskian_residual,
)
from ._nikitin import run_sweep as _run_sweep


def run_sweep(config):
    """Run a sweep described by a config dict (same schema as the CLI --config file).

    Returns a dict with "columns", "rows" and "provenance".
    """
    out = _run_sweep(json.dumps(config))
    out["provenance"] = json.loads(out["provenance"])
    return out


__all__ = [
    "AccuracyError",
    "ConfigError",
    "DegeneracyError",
    "DomainError",
    "ExponentOverflowError",
    "ModelParams",
    "__version__",
    "amplitudes",
    "derived_params",
    "eigenvalues",
    "eigenvalues_closed_form",
    "hamiltonian",
    "kummer_m",
    "ln_gamma",
    "numerical_propagator",
    "omega_integral",
    "populations",
    "propagator",
    "rabi_closed_form",
    "rabi_oracle",
    "run_sweep",
    "selftest",
    "tricomi_u",
    "wronskian_residual",
]
