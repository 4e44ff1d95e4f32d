"""Smoke tests for the omitsim python module (built from the C++ core)."""

import cmath
import math

import pytest

import omitsim as om

TWO_PI = 2.0 * math.pi


@pytest.fixture
def params():
    return om.aspelmeyer_params()


def drive(power, detuning, probe_offset):
    return om.DriveParams(
        pump_power=power,
        detuning_mode=om.DetuningMode.FIXED_EFFECTIVE,
        detuning=detuning,
        probe_offset=probe_offset,
    )


def test_version_and_constants():
    assert om.__version__
    assert om.SPEED_OF_LIGHT == 299792458.0
    assert abs(om.HBAR - 1.054571817e-34) < 1e-45


def test_bare_delay_is_two_over_kappa(params):
    d = drive(0.0, params.mech_freq, params.mech_freq)
    c = om.derive_constants(params, d)
    ss = om.steady_state_fixed(params.mech_freq, c, params)
    tau = om.group_delay_analytic(params.mech_freq, ss, params)
    expected = 2.0 / params.cavity_halfwidth
    assert abs(tau - expected) < 1e-9 * expected
    assert abs(tau - 1.4805e-6) < 1e-9


def test_probe_response_matches_python_formula(params):
    d = drive(1e-3, params.mech_freq, params.mech_freq)
    c = om.derive_constants(params, d)
    ss = om.steady_state_fixed(params.mech_freq, c, params)

    a = ss.opto_coupling / params.mirror_mass
    wm, kappa, gm = params.mech_freq, params.cavity_halfwidth, params.mech_damping

    for frac in (0.996, 0.999, 1.0, 1.001, 1.004):
        delta = frac * wm
        g = delta * delta - wm * wm + 1j * gm * delta
        low = kappa - 1j * (ss.eff_detuning + delta)
        up = kappa + 1j * (ss.eff_detuning - delta)
        want = (g * low - 1j * a) / (g * low * up + 2.0 * ss.eff_detuning * a)
        got = om.probe_response(delta, ss, params)
        assert abs(got - want) <= 1e-12 * abs(want)


def test_negative_delay_at_reference_point(params):
    d = drive(400e-6, params.mech_freq, params.mech_freq)
    c = om.derive_constants(params, d)
    ss = om.steady_state_fixed(params.mech_freq, c, params)
    tau = om.group_delay_analytic(params.mech_freq, ss, params)
    assert tau < 0.0
    numeric = om.group_delay_numeric(params.mech_freq, ss, params,
                                     params.mech_freq * 1e-6)
    assert abs(numeric - tau) <= 1e-3 * abs(tau)


def test_self_consistent_roots(params):
    d = drive(1e-3, params.mech_freq, params.mech_freq)
    c = om.derive_constants(params, d)
    ss = om.steady_state_fixed(params.mech_freq, c, params)
    bare = params.mech_freq + c.coupling * ss.mirror_pos / om.HBAR
    roots = om.steady_state_self_consistent(bare, c, params)
    assert len(roots) == 1
    assert abs(roots[0].eff_detuning - params.mech_freq) <= 1e-9 * params.mech_freq
    assert roots[0].residual < 1e-10


def test_sweep_probe_grid_and_order(params):
    spec = om.SweepSpec()
    spec.axis = om.SweepAxis.PROBE_OFFSET
    spec.start = 0.995 * params.mech_freq
    spec.stop = 1.005 * params.mech_freq
    spec.count = 101
    spec.physical = params
    spec.drive = drive(1e-3, params.mech_freq, params.mech_freq)
    series = om.sweep_probe(spec)
    rows = series.rows
    assert len(rows) == 101
    for i, row in enumerate(rows):
        assert row.axis_value == om.grid_point(spec.start, spec.stop, 101, i)
        assert -math.pi < row.phase_raw <= math.pi
    values = [r.axis_value for r in rows]
    assert values == sorted(values)


def test_sweep_power_variants(params):
    spec = om.SweepSpec()
    spec.axis = om.SweepAxis.PUMP_POWER
    spec.start = 10e-6
    spec.stop = 400e-6
    spec.count = 10
    spec.physical = params
    spec.drive = drive(0.0, params.mech_freq, params.mech_freq)
    spec.gamma_variants = [TWO_PI * 141.0, TWO_PI * 120.0]
    series = om.sweep_power(spec)
    assert len(series) == 2
    for s in series:
        assert all(row.group_delay < 0.0 for row in s.rows)
    assert abs(series[1].rows[-1].group_delay) > abs(series[0].rows[-1].group_delay)


def test_mean_field_bare_filter():
    # Toy hardware with a fast-settling mirror keeps this a true smoke test.
    p = om.PhysicalParams(
        cavity_length=0.025,
        pump_wavelength=1.064e-6,
        mirror_mass=145e-9,
        cavity_halfwidth=1e5,
        mech_freq=3e5,
        mech_damping=3e3,
    )
    d = om.DriveParams(
        pump_power=0.0,
        detuning_mode=om.DetuningMode.FIXED_EFFECTIVE,
        detuning=3e5,
        probe_offset=3.003e5,
    )
    c = om.derive_constants(p, d)
    fastest = max(p.cavity_halfwidth, p.mech_freq, abs(d.detuning) + abs(d.probe_offset))
    res = om.integrate_mean_field(p, c, d, 1e-3 * p.cavity_halfwidth,
                                  20.0 / p.mech_damping, 0.01 / fastest)
    want = 1.0 / complex(p.cavity_halfwidth, d.detuning - d.probe_offset)
    assert abs(res.c_plus - want) <= 1e-3 * abs(want)


def test_errors_are_raised():
    with pytest.raises(om.OmitError):
        om.PhysicalParams(
            cavity_length=-1.0,
            pump_wavelength=1e-6,
            mirror_mass=1e-9,
            cavity_halfwidth=1e5,
            mech_freq=1e6,
            mech_damping=100.0,
        )
    with pytest.raises(om.OmitError):
        om.phase(0j)


def test_phase_branch():
    assert om.phase(1 + 0j) == 0.0
    assert om.phase(-1 + 0j) == pytest.approx(math.pi)
    assert om.phase(-1 - 0j) > 0.0  # branch edge pinned to +pi
    assert om.phase(1j) == pytest.approx(math.pi / 2)
