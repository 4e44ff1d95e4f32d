#ifndef OMIT_MEAN_FIELD_HPP
#define OMIT_MEAN_FIELD_HPP

#include <complex>

#include "omit/steady_state.hpp"

namespace omit {

// Output of the time-domain mean-field integration.
struct MeanFieldResult {
    std::complex<double> c_plus;       // extracted sideband amplitude [s]
    std::complex<double> cavity_mean;  // window-averaged <c~> (pump component)
    double window_mismatch = 0.0;      // relative change between last two windows
    double dt = 0.0;                   // step actually used [s]
    double t_end = 0.0;                // integration time actually used [s]
};

// Integrates the three mean-value equations in the pump rotating frame,
//   dq/dt = p/m
//   dp/dt = -m omega_m^2 q + chi0 |c~|^2 - gamma_m p
//   dc~/dt = -[kappa + i(Delta0 - chi0 q / hbar)] c~ + eps_c + eps_p e^{-i delta t},
// with classic fixed-step RK4, starting from the pump-only steady state.
// The sideband amplitude is extracted by projecting <c~(t)> onto
// e^{-i delta t} over the final full probe periods and dividing by eps_p.
//
// drive.detuning_mode selects how the bare detuning is fixed: Bare uses
// Delta0 as given; FixedEffective back-solves Delta0 = Delta + chi0 q0/hbar
// so the settled state has the requested effective detuning.
//
// dt_request is snapped down so the probe period is an integer number of
// steps (keeps the projection windows exactly periodic). Throws
//   NotConverged        if dt_request is too coarse for the fastest scale,
//                       or the last two window projections differ by >1e-3,
//   UnstableIntegration if any state grows beyond 1e12 x its steady value.
//
// eps_p = 0 is allowed: c_plus is then the raw (numerically zero)
// projection and only cavity_mean is meaningful.
MeanFieldResult integrate_mean_field(const PhysicalParams& p,
                                     const DerivedConstants& c,
                                     const DriveParams& drive,
                                     double probe_amplitude,
                                     double t_end, double dt_request);

}  // namespace omit

#endif  // OMIT_MEAN_FIELD_HPP
