#ifndef OMIT_RESPONSE_HPP
#define OMIT_RESPONSE_HPP

#include <complex>

#include "omit/steady_state.hpp"

namespace omit {

// Everything the sweeps need at one probe offset.
struct ResponsePoint {
    double probe_offset = 0.0;              // delta [rad/s]
    std::complex<double> c_plus;            // first-order cavity amplitude [s]
    std::complex<double> lambda_response;   // 2 kappa c_plus (dimensionless)
    std::complex<double> eps_out_plus;      // 2 kappa c_plus - 1
    double transmission = 0.0;              // |eps_out_plus|
    double phase = 0.0;                     // principal arg, (-pi, pi]
    double group_delay = 0.0;               // tau [s], signed
};

// First-order intracavity response c_plus at probe offset delta.
// With G = delta^2 - omega_m^2 + i gamma_m delta, A = kappa - i(Delta+delta),
// B = kappa + i(Delta-delta) and a = alpha/m:
//   c_plus = (G A - i a) / (G A B + 2 Delta a).
// Numerator and denominator are evaluated separately (mass divided out)
// before the single division. Throws DegenerateDenominator if the
// denominator underflows to exactly zero.
std::complex<double> probe_response(double delta, const SteadyState& ss,
                                    const PhysicalParams& p);

// eps_out+ = 2 kappa c_plus - 1 (one-sided cavity input-output relation).
std::complex<double> output_amplitude(std::complex<double> c_plus, double kappa);

// Principal argument in (-pi, pi]; the -pi branch edge is pinned to +pi.
// Throws ZeroField for eps = 0.
double phase(std::complex<double> eps);

// tau = Im[(1/eps_out+) d eps_out+/d delta] by central differences with
// step h. Throws ZeroField if |eps_out+(delta)| < 1e-14.
double group_delay_numeric(double delta, const SteadyState& ss,
                           const PhysicalParams& p, double step);

// Same quantity from the exact quotient-rule derivative of c_plus
// (numerator and denominator are polynomials in delta).
double group_delay_analytic(double delta, const SteadyState& ss,
                            const PhysicalParams& p);

// Full per-point record; group delay via the analytic derivative.
ResponsePoint evaluate_point(double delta, const SteadyState& ss,
                             const PhysicalParams& p);

}  // namespace omit

#endif  // OMIT_RESPONSE_HPP
