#include "omit/response.hpp"

#include <cmath>
#include <complex>

namespace omit {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

// Shared factor evaluation; everything is per unit mass (a = alpha/m), which
// keeps intermediates near 1e20 instead of 1e-14 * 1e34.
struct Factors {
    cd mech;      // G = delta^2 - omega_m^2 + i gamma_m delta
    cd mech_d;    // dG/ddelta = 2 delta + i gamma_m
    cd lower;     // A = kappa - i (Delta + delta)
    cd upper;     // B = kappa + i (Delta - delta)
    double a;     // alpha / m
    double Delta;
};

Factors factors(double delta, const SteadyState& ss, const PhysicalParams& p) {
    Factors f;
    const double wm = p.mech_freq;
    f.mech = cd(delta * delta - wm * wm, p.mech_damping * delta);
    f.mech_d = cd(2.0 * delta, p.mech_damping);
    f.lower = cd(p.cavity_halfwidth, -(ss.eff_detuning + delta));
    f.upper = cd(p.cavity_halfwidth, ss.eff_detuning - delta);
    f.a = ss.coupling_per_mass(p);
    f.Delta = ss.eff_detuning;
    return f;
}

cd numerator(const Factors& f) { return f.mech * f.lower - kI * f.a; }

cd denominator(const Factors& f) {
    return f.mech * f.lower * f.upper + 2.0 * f.Delta * f.a;
}

}  // namespace

std::complex<double> probe_response(double delta, const SteadyState& ss,
                                    const PhysicalParams& p) {
    const Factors f = factors(delta, ss, p);
    const cd den = denominator(f);
    if (den == cd(0.0, 0.0))
        throw DegenerateDenominator(
            "probe response denominator vanished at delta = " +
            std::to_string(delta) + " rad/s");
    return numerator(f) / den;
}

std::complex<double> output_amplitude(std::complex<double> c_plus, double kappa) {
    return 2.0 * kappa * c_plus - 1.0;
}

double phase(std::complex<double> eps) {
    if (eps == cd(0.0, 0.0)) throw ZeroField("phase of a zero field");
    double arg = std::arg(eps);
    if (arg == -kPi) arg = kPi;  // pin the branch edge to +pi
    return arg;
}

double group_delay_numeric(double delta, const SteadyState& ss,
                           const PhysicalParams& p, double step) {
    if (!(step > 0.0)) throw ValidationError("finite-difference step must be > 0");
    const double kappa = p.cavity_halfwidth;
    const cd center = output_amplitude(probe_response(delta, ss, p), kappa);
    if (std::abs(center) < 1e-14)
        throw ZeroField("output field magnitude below 1e-14; group delay undefined");
    const cd upper = output_amplitude(probe_response(delta + step, ss, p), kappa);
    const cd lower = output_amplitude(probe_response(delta - step, ss, p), kappa);
    return std::imag((upper - lower) / (2.0 * step * center));
}

double group_delay_analytic(double delta, const SteadyState& ss,
                            const PhysicalParams& p) {
    const Factors f = factors(delta, ss, p);
    const cd num = numerator(f);
    const cd den = denominator(f);
    if (den == cd(0.0, 0.0))
        throw DegenerateDenominator(
            "probe response denominator vanished at delta = " +
            std::to_string(delta) + " rad/s");

    // d/ddelta of A and B is -i for both.
    const cd num_d = f.mech_d * f.lower - kI * f.mech;
    const cd den_d = f.mech_d * f.lower * f.upper -
                     kI * f.mech * f.upper - kI * f.mech * f.lower;

    const cd c_plus = num / den;
    const cd c_plus_d = (num_d * den - num * den_d) / (den * den);

    const double kappa = p.cavity_halfwidth;
    const cd eps = 2.0 * kappa * c_plus - 1.0;
    if (std::abs(eps) < 1e-14)
        throw ZeroField("output field magnitude below 1e-14; group delay undefined");
    return std::imag(2.0 * kappa * c_plus_d / eps);
}

ResponsePoint evaluate_point(double delta, const SteadyState& ss,
                             const PhysicalParams& p) {
    ResponsePoint pt;
    pt.probe_offset = delta;
    pt.c_plus = probe_response(delta, ss, p);
    pt.lambda_response = 2.0 * p.cavity_halfwidth * pt.c_plus;
    pt.eps_out_plus = output_amplitude(pt.c_plus, p.cavity_halfwidth);
    pt.transmission = std::abs(pt.eps_out_plus);
    pt.phase = phase(pt.eps_out_plus);
    pt.group_delay = group_delay_analytic(delta, ss, p);
    return pt;
}

}  // namespace omit
