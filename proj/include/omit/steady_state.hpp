#ifndef OMIT_STEADY_STATE_HPP
#define OMIT_STEADY_STATE_HPP

#include <complex>
#include <vector>

#include "omit/params.hpp"

namespace omit {

// Zeroth-order (pump-only) working point of the coupled system.
struct SteadyState {
    std::complex<double> cavity_amp;  // c0 = eps_c / (kappa + i Delta)
    double mirror_pos = 0.0;          // q0 = chi0 |c0|^2 / (m omega_m^2) [m]
    double eff_detuning = 0.0;        // Delta [rad/s]
    double opto_coupling = 0.0;       // alpha = chi0^2 |c0|^2 / hbar [kg/s^3]
    double residual = 0.0;            // scaled self-consistency residual

    // alpha with the mirror mass divided out [1/s^3]; the response formulas
    // are evaluated in this scaled form to keep intermediates in range.
    double coupling_per_mass(const PhysicalParams& p) const {
        return opto_coupling / p.mirror_mass;
    }
};

// Steady state at a prescribed effective detuning Delta. residual = 0 by
// construction. pump_phase rotates eps_c -> |eps_c| e^{i theta}; every
// derived quantity except the phase of cavity_amp is independent of it.
SteadyState steady_state_fixed(double eff_detuning, const DerivedConstants& c,
                               const PhysicalParams& p, double pump_phase = 0.0);

// All real solutions Delta of the radiation-pressure self-consistency
//   Delta = Delta0 - chi0^2 |eps_c|^2 / (hbar m omega_m^2 (kappa^2 + Delta^2)),
// a cubic in Delta. Roots are located by a dense sign scan over the bracket
// [Delta0 - K/kappa^2, Delta0] (K = chi0^2 |eps_c|^2 / (hbar m omega_m^2)),
// refined by bisection and polished by Newton. Returns 1 to 3 states sorted
// ascending by Delta. Throws SolverFailure if any root's scaled residual
// cannot be pushed below 1e-10.
std::vector<SteadyState> steady_state_self_consistent(double bare_detuning,
                                                      const DerivedConstants& c,
                                                      const PhysicalParams& p,
                                                      double pump_phase = 0.0);

}  // namespace omit

#endif  // OMIT_STEADY_STATE_HPP
