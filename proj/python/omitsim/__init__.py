"""Pump-probe linear response of a one-sided optomechanical cavity.

Thin python surface over the C++ core: steady states, the closed-form probe
susceptibility, output transmission/phase, tunable group delay, and the
time-domain mean-field cross-check.
"""

from ._core import (  # noqa: F401
    HBAR,
    SPEED_OF_LIGHT,
    DerivedConstants,
    DetuningMode,
    DriveParams,
    MeanFieldResult,
    OmitError,
    PhysicalParams,
    ResponsePoint,
    Series,
    SeriesRow,
    SteadyState,
    SweepAxis,
    SweepSpec,
    __version__,
    derive_constants,
    evaluate_point,
    grid_point,
    group_delay_analytic,
    group_delay_numeric,
    integrate_mean_field,
    output_amplitude,
    phase,
    probe_response,
    steady_state_fixed,
    steady_state_self_consistent,
    sweep_power,
    sweep_probe,
)

TWO_PI = 6.283185307179586476925287


def aspelmeyer_params():
    """The bundled reference hardware set (see configs/aspelmeyer.cfg)."""
    return PhysicalParams(
        cavity_length=0.025,
        pump_wavelength=1.064e-6,
        mirror_mass=145e-9,
        cavity_halfwidth=TWO_PI * 215e3,
        mech_freq=TWO_PI * 947e3,
        mech_damping=TWO_PI * 141.0,
    )
