#ifndef OMIT_SWEEP_HPP
#define OMIT_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "omit/response.hpp"

namespace omit {

enum class SweepAxis {
    ProbeOffset,  // grid over delta [rad/s]
    PumpPower,    // grid over P_c [W]
};

// Linear grid plus the fixed evaluation context.
struct SweepSpec {
    SweepAxis axis = SweepAxis::ProbeOffset;
    double start = 0.0;  // axis units (rad/s or W)
    double stop = 0.0;
    int count = 0;       // >= 2
    PhysicalParams physical;
    DriveParams drive;
    std::vector<double> gamma_variants;  // mech_damping overrides [rad/s]

    void validate() const;
};

struct SeriesRow {
    double axis_value = 0.0;       // delta [rad/s] or P_c [W]
    double re_lambda = 0.0;        // Re(2 kappa c_plus)
    double im_lambda = 0.0;        // Im(2 kappa c_plus)
    double transmission = 0.0;     // |eps_out+|
    double phase_raw = 0.0;        // (-pi, pi]
    double phase_unwrapped = 0.0;  // filled by unwrap_phase
    double group_delay = 0.0;      // tau [s]
};

struct Series {
    double gamma_m = 0.0;  // mech_damping the series was evaluated with
    std::vector<SeriesRow> rows;
};

// Grid point i of n: start + i*(stop-start)/(n-1). Single formula shared by
// every sweep so axis values are bit-reproducible.
double grid_point(double start, double stop, int count, int index);

// Probe-offset sweep: evaluate_point at every grid delta, then one unwrap
// pass. Points are evaluated in parallel (capped by OMIT_THREADS) and
// committed in index order, so output is independent of thread count.
// Model errors are rethrown annotated with the lowest failing grid index.
Series sweep_probe(const SweepSpec& spec);

// Pump-power sweep at fixed delta = spec.drive.probe_offset, one series per
// gamma variant (spec.gamma_variants, or the base mech_damping if empty).
std::vector<Series> sweep_power(const SweepSpec& spec);

// Standard 2pi-jump correction: first row keeps its raw phase, successive
// differences are forced into (-pi, pi]. Idempotent.
void unwrap_phase(std::vector<SeriesRow>& rows);

}  // namespace omit

#endif  // OMIT_SWEEP_HPP
