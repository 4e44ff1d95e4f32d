#include "omit/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace omit {

namespace {

constexpr double kResidualTol = 1e-10;
constexpr int kScanPoints = 4096;

SteadyState assemble(double delta_eff, const DerivedConstants& c,
                     const PhysicalParams& p, double pump_phase) {
    const std::complex<double> eps_c =
        std::polar(c.pump_amplitude, pump_phase);
    const std::complex<double> pole(p.cavity_halfwidth, delta_eff);

    SteadyState ss;
    ss.eff_detuning = delta_eff;
    ss.cavity_amp = eps_c / pole;
    const double photon_number = std::norm(ss.cavity_amp);
    ss.mirror_pos =
        c.coupling * photon_number / (p.mirror_mass * p.mech_freq * p.mech_freq);
    ss.opto_coupling = c.coupling * c.coupling * photon_number / kHbar;
    ss.residual = 0.0;
    return ss;
}

}  // namespace

SteadyState steady_state_fixed(double eff_detuning, const DerivedConstants& c,
                               const PhysicalParams& p, double pump_phase) {
    if (!std::isfinite(eff_detuning))
        throw ValidationError("effective detuning must be finite");
    return assemble(eff_detuning, c, p, pump_phase);
}

std::vector<SteadyState> steady_state_self_consistent(double bare_detuning,
                                                      const DerivedConstants& c,
                                                      const PhysicalParams& p,
                                                      double pump_phase) {
    if (!std::isfinite(bare_detuning))
        throw ValidationError("bare detuning must be finite");

    const double kappa = p.cavity_halfwidth;
    const double kappa_sq = kappa * kappa;
    // K = chi0^2 |eps_c|^2 / (hbar m omega_m^2); radiation-pressure shift is
    // K / (kappa^2 + Delta^2), which lies in (0, K/kappa^2].
    const double amp_sq = c.pump_amplitude * c.pump_amplitude;
    const double big_k = c.coupling * c.coupling * amp_sq /
                         (kHbar * p.mirror_mass * p.mech_freq * p.mech_freq);

    const double scale = std::max(std::abs(bare_detuning), kappa);

    auto f = [&](double delta) {
        return delta - bare_detuning + big_k / (kappa_sq + delta * delta);
    };
    auto f_prime = [&](double delta) {
        const double denom = kappa_sq + delta * delta;
        return 1.0 - 2.0 * big_k * delta / (denom * denom);
    };

    std::vector<double> roots;
    if (big_k == 0.0) {
        roots.push_back(bare_detuning);
    } else {
        // Every root lies in [Delta0 - K/kappa^2, Delta0]; pad by kappa so
        // sign changes at the edges are not missed.
        const double lo = bare_detuning - big_k / kappa_sq - kappa;
        const double hi = bare_detuning + kappa;
        double prev_x = lo;
        double prev_f = f(lo);
        for (int i = 1; i <= kScanPoints; ++i) {
            const double x = lo + (hi - lo) * static_cast<double>(i) / kScanPoints;
            const double fx = f(x);
            if (prev_f == 0.0) {
                roots.push_back(prev_x);
            } else if (std::signbit(prev_f) != std::signbit(fx)) {
                double a = prev_x, b = x, fa = prev_f;
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (a + b);
                    const double fm = f(mid);
                    if (fm == 0.0 || 0.5 * (b - a) < 1e-15 * scale) {
                        a = b = mid;
                        break;
                    }
                    if (std::signbit(fa) == std::signbit(fm)) {
                        a = mid;
                        fa = fm;
                    } else {
                        b = mid;
                    }
                }
                double root = 0.5 * (a + b);
                for (int it = 0; it < 8; ++it) {  // Newton polish
                    const double fr = f(root);
                    const double fp = f_prime(root);
                    if (fp == 0.0) break;
                    const double next = root - fr / fp;
                    if (!std::isfinite(next) || std::abs(next - root) > kappa) break;
                    root = next;
                }
                roots.push_back(root);
            }
            prev_x = x;
            prev_f = fx;
        }
        if (f(hi) == 0.0) roots.push_back(hi);
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [&](double a, double b) {
                                return std::abs(a - b) < 1e-9 * scale;
                            }),
                roots.end());

    std::vector<SteadyState> out;
    out.reserve(roots.size());
    for (double root : roots) {
        const double res = std::abs(f(root)) / scale;
        if (res >= kResidualTol)
            throw SolverFailure("self-consistent detuning root at " +
                                std::to_string(root) +
                                " rad/s: scaled residual " + std::to_string(res) +
                                " exceeds 1e-10");
        SteadyState ss = assemble(root, c, p, pump_phase);
        ss.residual = res;
        out.push_back(ss);
    }
    return out;
}

}  // namespace omit
