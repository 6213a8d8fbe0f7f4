"""Liouville coherent states for open two-level and oscillator systems."""

from ._lcs import (
    DimensionError,
    DisentangleSample,
    DomainError,
    NumericalError,
    OscillatorBathParams,
    RateFunctions,
    SpinBosonParams,
    apply_superop,
    circle_map,
    coherent_state,
    evolve_params,
    identity_resolution_check_su2,
    integrate_su2,
    integrate_su11,
    observables,
    sigma_of,
    solve_const,
    solve_ode,
    su2_evolve,
    su2_rates,
    su11_evolve,
    su11_rates,
    su11_state,
    trace_distance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
