#include "omit/params.hpp"

#include <cmath>

namespace omit {

void PhysicalParams::validate() const {
    if (!(cavity_length > 0.0)) throw NonPositiveParameter("cavity_length");
    if (!(pump_wavelength > 0.0)) throw NonPositiveParameter("pump_wavelength");
    if (!(mirror_mass > 0.0)) throw NonPositiveParameter("mirror_mass");
    if (!(cavity_halfwidth > 0.0)) throw NonPositiveParameter("cavity_halfwidth");
    if (!(mech_freq > 0.0)) throw NonPositiveParameter("mech_freq");
    if (mech_damping < 0.0 || !std::isfinite(mech_damping))
        throw NonPositiveParameter("mech_damping");
}

void DriveParams::validate() const {
    if (pump_power < 0.0 || !std::isfinite(pump_power))
        throw ValidationError("pump_power must be >= 0 and finite");
    if (!std::isfinite(detuning)) throw ValidationError("detuning must be finite");
    if (!std::isfinite(probe_offset))
        throw ValidationError("probe_offset must be finite");
}

DerivedConstants derive_constants(const PhysicalParams& p, const DriveParams& d) {
    p.validate();
    d.validate();
    DerivedConstants c;
    c.cavity_freq = kTwoPi * kSpeedOfLight / p.pump_wavelength;
    c.coupling = kHbar * c.cavity_freq / p.cavity_length;
    c.pump_amplitude =
        std::sqrt(2.0 * p.cavity_halfwidth * d.pump_power / (kHbar * c.cavity_freq));
    return c;
}

}  // namespace omit
