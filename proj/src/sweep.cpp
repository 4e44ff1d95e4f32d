#include "omit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace omit {

namespace {

int thread_budget() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("OMIT_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < n)
            n = static_cast<unsigned>(cap);
    }
    return static_cast<int>(n);
}

// Map f over [0, count) with striding workers; rows land at their own index,
// so the assembled output does not depend on the thread count. The lowest
// failing index wins if several points throw.
template <typename Fn>
void parallel_for(int count, Fn&& f) {
    const int workers = std::min(thread_budget(), std::max(count, 1));
    if (workers <= 1 || count < 4) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::mutex mu;
    std::exception_ptr first_error;
    int first_index = count;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int i = w; i < count; i += workers) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (i < first_index) {
                        first_index = i;
                        first_error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

SeriesRow make_row(double axis_value, const ResponsePoint& pt) {
    SeriesRow row;
    row.axis_value = axis_value;
    row.re_lambda = pt.lambda_response.real();
    row.im_lambda = pt.lambda_response.imag();
    row.transmission = pt.transmission;
    row.phase_raw = pt.phase;
    row.phase_unwrapped = pt.phase;
    row.group_delay = pt.group_delay;
    return row;
}

}  // namespace

void SweepSpec::validate() const {
    physical.validate();
    drive.validate();
    if (count < 2) throw ValidationError("sweep count must be >= 2");
    if (!(start < stop)) throw ValidationError("sweep start must be < stop");
    for (double g : gamma_variants)
        if (g < 0.0 || !std::isfinite(g))
            throw ValidationError("gamma variant must be >= 0 and finite");
}

double grid_point(double start, double stop, int count, int index) {
    if (count < 2) return start;
    return start + static_cast<double>(index) * (stop - start) /
                       static_cast<double>(count - 1);
}

Series sweep_probe(const SweepSpec& spec) {
    spec.validate();
    if (spec.axis != SweepAxis::ProbeOffset)
        throw ValidationError("sweep_probe requires a ProbeOffset axis");

    const DerivedConstants consts = derive_constants(spec.physical, spec.drive);
    if (spec.drive.detuning_mode != DetuningMode::FixedEffective)
        throw ValidationError("probe sweeps fix the effective detuning directly");
    const SteadyState ss =
        steady_state_fixed(spec.drive.detuning, consts, spec.physical);

    Series series;
    series.gamma_m = spec.physical.mech_damping;
    series.rows.resize(spec.count);
    parallel_for(spec.count, [&](int i) {
        const double delta = grid_point(spec.start, spec.stop, spec.count, i);
        try {
            series.rows[i] = make_row(delta, evaluate_point(delta, ss, spec.physical));
        } catch (const Error& e) {
            throw SolverFailure("probe sweep, grid index " + std::to_string(i) +
                                ": " + e.what());
        }
    });
    unwrap_phase(series.rows);
    return series;
}

std::vector<Series> sweep_power(const SweepSpec& spec) {
    spec.validate();
    if (spec.axis != SweepAxis::PumpPower)
        throw ValidationError("sweep_power requires a PumpPower axis");
    if (spec.drive.detuning_mode != DetuningMode::FixedEffective)
        throw ValidationError("power sweeps fix the effective detuning directly");

    std::vector<double> gammas = spec.gamma_variants;
    if (gammas.empty()) gammas.push_back(spec.physical.mech_damping);

    std::vector<Series> out;
    out.reserve(gammas.size());
    for (double gamma : gammas) {
        PhysicalParams phys = spec.physical;
        phys.mech_damping = gamma;

        Series series;
        series.gamma_m = gamma;
        series.rows.resize(spec.count);
        parallel_for(spec.count, [&](int i) {
            const double power = grid_point(spec.start, spec.stop, spec.count, i);
            try {
                DriveParams drive = spec.drive;
                drive.pump_power = power;
                const DerivedConstants consts = derive_constants(phys, drive);
                const SteadyState ss =
                    steady_state_fixed(drive.detuning, consts, phys);
                series.rows[i] = make_row(
                    power, evaluate_point(drive.probe_offset, ss, phys));
            } catch (const Error& e) {
                throw SolverFailure("power sweep, grid index " + std::to_string(i) +
                                    ": " + e.what());
            }
        });
        unwrap_phase(series.rows);
        out.push_back(std::move(series));
    }
    return out;
}

void unwrap_phase(std::vector<SeriesRow>& rows) {
    if (rows.empty()) return;
    rows.front().phase_unwrapped = rows.front().phase_raw;
    // Accumulate whole-2pi offsets so a jump-free series stays bit-identical
    // to its raw phases.
    double offset = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double diff = rows[i].phase_raw - rows[i - 1].phase_raw;
        double k = std::round(diff / kTwoPi);
        if (diff - kTwoPi * k <= -kPi) k -= 1.0;  // adjusted jump in (-pi, pi]
        offset -= kTwoPi * k;
        rows[i].phase_unwrapped = rows[i].phase_raw + offset;
    }
}

}  // namespace omit
