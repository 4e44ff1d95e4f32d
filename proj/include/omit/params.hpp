#ifndef OMIT_PARAMS_HPP
#define OMIT_PARAMS_HPP

#include "omit/constants.hpp"
#include "omit/errors.hpp"

namespace omit {

// Fixed hardware constants of the cavity–oscillator system.
// All frequencies are angular [rad/s]; lengths [m]; mass [kg].
struct PhysicalParams {
    double cavity_length = 0.0;     // L [m]
    double pump_wavelength = 0.0;   // lambda [m]
    double mirror_mass = 0.0;       // m [kg]
    double cavity_halfwidth = 0.0;  // kappa [rad/s], amplitude decay rate
    double mech_freq = 0.0;         // omega_m [rad/s]
    double mech_damping = 0.0;      // gamma_m [rad/s]

    // Mechanical quality factor omega_m / gamma_m.
    double quality_factor() const { return mech_freq / mech_damping; }

    // omega_m / kappa; >> 1 means sideband-resolved operation.
    double sideband_resolution() const { return mech_freq / cavity_halfwidth; }

    // Throws NonPositiveParameter naming the offending field.
    // gamma_m = 0 is tolerated (flagged by the CLI, Q becomes infinite).
    void validate() const;
};

enum class DetuningMode {
    FixedEffective,  // value is the effective detuning Delta [rad/s]
    Bare,            // value is the bare detuning Delta0 = omega0 - omega_c [rad/s]
};

// Pump and probe drive settings.
struct DriveParams {
    double pump_power = 0.0;       // P_c [W]
    DetuningMode detuning_mode = DetuningMode::FixedEffective;
    double detuning = 0.0;         // Delta or Delta0 depending on mode [rad/s]
    double probe_offset = 0.0;     // delta = omega_p - omega_c [rad/s]

    void validate() const;
};

// Quantities derived once from PhysicalParams + DriveParams.
struct DerivedConstants {
    double cavity_freq = 0.0;     // omega0 = 2 pi c / lambda [rad/s]
    double coupling = 0.0;        // chi0 = hbar omega0 / L [N]
    double pump_amplitude = 0.0;  // |eps_c| = sqrt(2 kappa P_c / hbar omega0)
};

// omega0 = 2 pi c / lambda is used for both the coupling constant and the
// pump amplitude (the carrier and pump frequencies differ by << 1 ppb here).
DerivedConstants derive_constants(const PhysicalParams& p, const DriveParams& d);

}  // namespace omit

#endif  // OMIT_PARAMS_HPP
