#ifndef OMIT_CONFIG_HPP
#define OMIT_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "omit/params.hpp"

namespace omit {

// Fully resolved run settings. Defaults reproduce the bundled
// configs/aspelmeyer.cfg parameter set, so the CLI is usable without a file.
struct RunConfig {
    PhysicalParams physical{
        /*cavity_length=*/0.025,
        /*pump_wavelength=*/1.064e-6,
        /*mirror_mass=*/145e-9,
        /*cavity_halfwidth=*/hz_to_radps(215e3),
        /*mech_freq=*/hz_to_radps(947e3),
        /*mech_damping=*/hz_to_radps(141.0),
    };
    DriveParams drive{
        /*pump_power=*/1e-3,
        /*detuning_mode=*/DetuningMode::FixedEffective,
        /*detuning=*/hz_to_radps(947e3),
        /*probe_offset=*/hz_to_radps(947e3),
    };

    double coupling_scale = 1.0;  // multiplies chi0; 0 turns the coupling off
    double probe_power = 0.0;     // P_p [W]; linear response does not use it

    // Sweep window; interpreted per command (response/phase: delta/omega_m,
    // delay: watts). Unset means "single point" for delay.
    std::optional<double> sweep_start;
    std::optional<double> sweep_stop;
    std::optional<int> sweep_count;

    std::optional<double> fd_step;       // numeric-derivative step [rad/s]
    std::vector<double> gamma_variants;  // delay-sweep overrides [rad/s]

    // Time-domain oracle controls (verify command).
    bool oracle_time_domain = true;
    double oracle_probe_scale = 1e-3;   // eps_p = scale * |eps_c|
    std::optional<double> oracle_t_end; // [s], default 20/gamma_m
    std::optional<double> oracle_dt;    // [s], default 0.005/fastest rate

    // chi0 scaled by coupling_scale; this is what every command evaluates with.
    DerivedConstants derived() const {
        DerivedConstants c = derive_constants(physical, drive);
        c.coupling *= coupling_scale;
        return c;
    }
};

// Parses the flat key-value format documented in the README. Frequencies are
// given in Hz and converted to rad/s here (and only here). Rejects unknown
// and duplicate keys with line numbers; missing required keys are listed.
RunConfig parse_config(const std::string& text);

// parse_config applied to a file's contents. Throws IoError if unreadable.
RunConfig load_config(const std::string& path);

}  // namespace omit

#endif  // OMIT_CONFIG_HPP
