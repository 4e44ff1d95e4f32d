#include "omit/mean_field.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace omit {

namespace {

using cd = std::complex<double>;

struct State {
    double q;  // mirror position [m]
    double p;  // mirror momentum [kg m/s]
    cd c;      // cavity amplitude in the pump frame

    State operator+(const State& o) const { return {q + o.q, p + o.p, c + o.c}; }
    State operator*(double s) const { return {q * s, p * s, c * s}; }
};

}  // namespace

MeanFieldResult integrate_mean_field(const PhysicalParams& p,
                                     const DerivedConstants& c,
                                     const DriveParams& drive,
                                     double probe_amplitude,
                                     double t_end, double dt_request) {
    p.validate();
    const double kappa = p.cavity_halfwidth;
    const double omega_m = p.mech_freq;
    const double gamma_m = p.mech_damping;
    const double mass = p.mirror_mass;
    const double chi0 = c.coupling;
    const double eps_c = c.pump_amplitude;
    const double eps_p = probe_amplitude;
    const double delta = drive.probe_offset;

    if (delta == 0.0)
        throw ValidationError("probe_offset must be nonzero for sideband extraction");
    if (!(t_end > 0.0) || !(dt_request > 0.0))
        throw ValidationError("t_end and dt must be > 0");

    // Resolve the bare detuning and the settled operating point.
    double delta0;      // omega0 - omega_c actually driven with
    SteadyState start;  // settled pump-only state (integration starts here)
    if (drive.detuning_mode == DetuningMode::FixedEffective) {
        start = steady_state_fixed(drive.detuning, c, p);
        delta0 = drive.detuning + chi0 * start.mirror_pos / kHbar;
    } else {
        delta0 = drive.detuning;
        auto roots = steady_state_self_consistent(delta0, c, p);
        start = roots.back();  // branch with the smallest radiation shift
    }

    const double fastest = std::max({kappa, omega_m,
                                     std::abs(start.eff_detuning) + std::abs(delta)});
    const double dt_bound = 0.01 / fastest;
    if (dt_request > dt_bound)
        throw NotConverged("dt = " + std::to_string(dt_request) +
                           " s is too coarse for the fastest timescale; need dt <= " +
                           std::to_string(dt_bound) + " s");

    // Snap dt so one probe period is an integer number of steps; the
    // projection windows then hold whole periods and the pump component
    // integrates to zero against e^{+i delta t}.
    const double period = kTwoPi / std::abs(delta);
    const long steps_per_period =
        static_cast<long>(std::ceil(period / dt_request));
    const double dt = period / static_cast<double>(steps_per_period);

    const long window_steps = 10 * steps_per_period;
    const double window_dur = window_steps * dt;
    const long n_windows =
        std::max(2L, static_cast<long>(std::ceil(t_end / window_dur)));
    const long n_steps = n_windows * window_steps;

    // Instability references (floored so undriven configurations still work).
    const double ref_c =
        std::max({std::abs(start.cavity_amp), std::abs(eps_p) / kappa, 1e-30});
    const double ref_q = std::max(
        {std::abs(start.mirror_pos), chi0 * ref_c * ref_c / (mass * omega_m * omega_m),
         1e-30});
    const double ref_p = mass * omega_m * ref_q;

    State s{start.mirror_pos, 0.0, start.cavity_amp};

    const cd decay_rate(kappa, delta0);  // kappa + i Delta0
    auto rhs = [&](const State& x, const cd& probe_rotor) {
        State d;
        d.q = x.p / mass;
        d.p = -mass * omega_m * omega_m * x.q + chi0 * std::norm(x.c) -
              gamma_m * x.p;
        d.c = -(decay_rate - cd(0.0, chi0 * x.q / kHbar)) * x.c + eps_c +
              eps_p * probe_rotor;
        return d;
    };

    // Probe rotor e^{-i delta t} advanced one step (and half step) at a time;
    // reset at each period boundary so no phase drift accumulates.
    const cd rot_step = std::polar(1.0, -delta * dt);
    const cd rot_half = std::polar(1.0, -delta * 0.5 * dt);

    cd rotor(1.0, 0.0);
    cd proj_prev(0.0, 0.0);  // window N-2 projection sum
    cd proj_last(0.0, 0.0);  // window N-1 projection sum
    cd mean_last(0.0, 0.0);

    const long check_stride = 4096;

    for (long k = 0; k < n_steps; ++k) {
        if (k % steps_per_period == 0) rotor = cd(1.0, 0.0);

        if (k >= n_steps - 2 * window_steps) {
            // conj(rotor) = e^{+i delta t_k}
            const cd contrib = s.c * std::conj(rotor);
            if (k >= n_steps - window_steps) {
                proj_last += contrib;
                mean_last += s.c;
            } else {
                proj_prev += contrib;
            }
        }

        const State k1 = rhs(s, rotor);
        const cd rotor_mid = rotor * rot_half;
        const State k2 = rhs(s + k1 * (0.5 * dt), rotor_mid);
        const State k3 = rhs(s + k2 * (0.5 * dt), rotor_mid);
        const cd rotor_end = rotor * rot_step;
        const State k4 = rhs(s + k3 * dt, rotor_end);
        s = s + (k1 + (k2 + k3) * 2.0 + k4) * (dt / 6.0);
        rotor = rotor_end;

        if (k % check_stride == 0) {
            if (!(std::abs(s.q) < 1e12 * ref_q) || !(std::abs(s.p) < 1e12 * ref_p) ||
                !(std::abs(s.c) < 1e12 * ref_c))
                throw UnstableIntegration(
                    "state magnitude exceeded 1e12 x steady scale at t = " +
                    std::to_string(k * dt) + " s");
        }
    }

    const double inv_w = 1.0 / static_cast<double>(window_steps);
    proj_prev *= inv_w;
    proj_last *= inv_w;
    mean_last *= inv_w;

    MeanFieldResult out;
    out.cavity_mean = mean_last;
    out.dt = dt;
    out.t_end = n_steps * dt;

    if (eps_p == 0.0) {
        out.c_plus = proj_last;
        out.window_mismatch = std::abs(proj_last - proj_prev);
        return out;
    }

    const double denom = std::max(std::abs(proj_last), 1e-300);
    out.window_mismatch = std::abs(proj_last - proj_prev) / denom;
    if (out.window_mismatch > 1e-3)
        throw NotConverged(
            "sideband projection changed by " + std::to_string(out.window_mismatch) +
            " (relative) between the last two windows; increase t_end or "
            "decrease dt");
    out.c_plus = proj_last / eps_p;
    return out;
}

}  // namespace omit
