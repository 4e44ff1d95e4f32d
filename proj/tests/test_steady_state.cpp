#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "omit/steady_state.hpp"
#include "test_util.hpp"

using namespace omit;
using namespace omit_test;

namespace {

DerivedConstants constants_at(const PhysicalParams& p, double power) {
    DriveParams d;
    d.pump_power = power;
    return derive_constants(p, d);
}

// Test-side root oracle: dense scan with sign-change bisection only (no
// Newton), on a much finer grid than the implementation uses.
std::vector<double> scan_roots(double bare, double big_k, double kappa,
                               int points) {
    auto f = [&](double x) {
        return x - bare + big_k / (kappa * kappa + x * x);
    };
    const double lo = bare - big_k / (kappa * kappa) - kappa;
    const double hi = bare + kappa;
    std::vector<double> roots;
    double px = lo, pf = f(lo);
    for (int i = 1; i <= points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / points;
        const double fx = f(x);
        if (pf == 0.0) roots.push_back(px);
        else if (std::signbit(pf) != std::signbit(fx)) {
            double a = px, b = x, fa = pf;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                const double fm = f(mid);
                if (fm == 0.0) { a = b = mid; break; }
                if (std::signbit(fa) == std::signbit(fm)) { a = mid; fa = fm; }
                else b = mid;
                if (b - a < 1e-14 * std::max(std::abs(bare), kappa)) break;
            }
            roots.push_back(0.5 * (a + b));
        }
        px = x;
        pf = fx;
    }
    return roots;
}

double big_k_of(const PhysicalParams& p, const DerivedConstants& c) {
    return c.coupling * c.coupling * c.pump_amplitude * c.pump_amplitude /
           (kHbar * p.mirror_mass * p.mech_freq * p.mech_freq);
}

}  // namespace

TEST_CASE("undriven cavity has a trivial steady state") {
    const PhysicalParams p = reference_params();
    const DerivedConstants c = constants_at(p, 0.0);
    const SteadyState ss = steady_state_fixed(p.mech_freq, c, p);
    CHECK(ss.cavity_amp == std::complex<double>(0.0, 0.0));
    CHECK(ss.mirror_pos == 0.0);
    CHECK(ss.opto_coupling == 0.0);
}

TEST_CASE("resonant pump gives a purely real cavity amplitude") {
    const PhysicalParams p = reference_params();
    const DerivedConstants c = constants_at(p, 1e-3);
    const SteadyState ss = steady_state_fixed(0.0, c, p);
    CHECK(ss.cavity_amp.imag() == 0.0);
    CHECK(rel_close(ss.cavity_amp.real(), c.pump_amplitude / p.cavity_halfwidth,
                    1e-14));
}

TEST_CASE("fixed-detuning state reproduces the frozen 1 mW values") {
    const PhysicalParams p = reference_params();
    const DerivedConstants c = constants_at(p, 1e-3);
    const SteadyState ss = steady_state_fixed(p.mech_freq, c, p);

    CHECK(rel_close(ss.opto_coupling, frozen::alpha_1mw, 1e-12));
    CHECK(rel_close(ss.mirror_pos, frozen::mirror_pos_1mw, 1e-12));
    CHECK(ss.residual == 0.0);

    // Defining relations hold to 1e-12.
    const std::complex<double> pole(p.cavity_halfwidth, ss.eff_detuning);
    CHECK(rel_close(ss.cavity_amp, c.pump_amplitude / pole, 1e-12));
    CHECK(rel_close(ss.mirror_pos,
                    c.coupling * std::norm(ss.cavity_amp) /
                        (p.mirror_mass * p.mech_freq * p.mech_freq),
                    1e-12));
}

TEST_CASE("alpha scales linearly with pump power") {
    const PhysicalParams p = reference_params();
    const SteadyState a = steady_state_fixed(p.mech_freq, constants_at(p, 10e-6), p);
    const SteadyState b =
        steady_state_fixed(p.mech_freq, constants_at(p, 400e-6), p);
    CHECK(rel_close(a.opto_coupling, frozen::alpha_10uw, 1e-12));
    CHECK(rel_close(b.opto_coupling, frozen::alpha_400uw, 1e-12));
    CHECK(rel_close(b.opto_coupling, 40.0 * a.opto_coupling, 1e-12));
}

TEST_CASE("pump phase leaves |c0|-derived quantities unchanged") {
    const PhysicalParams p = reference_params();
    const DerivedConstants c = constants_at(p, 1e-3);
    const SteadyState base = steady_state_fixed(p.mech_freq, c, p, 0.0);
    for (double theta : {0.3, 1.7, -2.9}) {
        const SteadyState rot = steady_state_fixed(p.mech_freq, c, p, theta);
        CHECK(rel_close(rot.mirror_pos, base.mirror_pos, 1e-12));
        CHECK(rel_close(rot.opto_coupling, base.opto_coupling, 1e-12));
        CHECK(rel_close(std::abs(rot.cavity_amp), std::abs(base.cavity_amp), 1e-12));
    }
}

TEST_CASE("self-consistent solve: no pump means the bare root") {
    const PhysicalParams p = reference_params();
    const DerivedConstants c = constants_at(p, 0.0);
    const auto states = steady_state_self_consistent(3.0e6, c, p);
    REQUIRE(states.size() == 1);
    CHECK(states[0].eff_detuning == 3.0e6);
}

TEST_CASE("self-consistent solve: zero coupling means the bare root") {
    const PhysicalParams p = reference_params();
    DerivedConstants c = constants_at(p, 1e-3);
    c.coupling = 0.0;
    const auto states = steady_state_self_consistent(-2.0e6, c, p);
    REQUIRE(states.size() == 1);
    CHECK(states[0].eff_detuning == -2.0e6);
}

TEST_CASE("bare detuning chosen to land a root exactly at omega_m") {
    const PhysicalParams p = reference_params();
    const DerivedConstants c = constants_at(p, 1e-3);
    CHECK(rel_close(big_k_of(p, c), frozen::big_k_1mw, 1e-12));

    const auto states =
        steady_state_self_consistent(frozen::bare_detuning_root_at_wm_1mw, c, p);
    REQUIRE(states.size() == 1);
    CHECK(rel_close(states[0].eff_detuning, p.mech_freq, 1e-12));
    CHECK(states[0].residual < 1e-10);
}

TEST_CASE("returned roots satisfy the self-consistency relation") {
    const PhysicalParams p = reference_params();
    const DerivedConstants c = constants_at(p, 1e-3);
    const double bare = frozen::bare_detuning_root_at_wm_1mw;
    for (const SteadyState& ss : steady_state_self_consistent(bare, c, p)) {
        const double shift = c.coupling * ss.mirror_pos / kHbar;
        const double res = std::abs(ss.eff_detuning - bare + shift) /
                           std::max(std::abs(bare), p.cavity_halfwidth);
        CHECK(res < 1e-10);
    }
}

TEST_CASE("root count and positions match the dense-scan oracle") {
    // Random configurations spanning the monostable and bistable regimes.
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log_mass(-10.0, -6.0);
    std::uniform_real_distribution<double> power(0.0, 5e-3);
    std::uniform_real_distribution<double> bare_frac(-2.0, 6.0);

    for (int trial = 0; trial < 25; ++trial) {
        PhysicalParams p = reference_params();
        p.mirror_mass = std::pow(10.0, log_mass(rng));
        DriveParams d;
        d.pump_power = power(rng);
        const DerivedConstants c = derive_constants(p, d);
        const double big_k = big_k_of(p, c);
        const double kappa = p.cavity_halfwidth;
        const double bare =
            bare_frac(rng) * std::max(kappa, big_k / (kappa * kappa) / 4.0);

        const auto states = steady_state_self_consistent(bare, c, p);
        const auto oracle = scan_roots(bare, big_k, kappa, 200000);
        REQUIRE(states.size() == oracle.size());
        for (std::size_t i = 0; i < states.size(); ++i) {
            CHECK(rel_close(states[i].eff_detuning, oracle[i], 1e-8));
            CHECK(states[i].residual < 1e-10);
        }
        for (std::size_t i = 1; i < states.size(); ++i)
            CHECK(states[i - 1].eff_detuning < states[i].eff_detuning);
    }
}

TEST_CASE("constructed three-root problems are solved exactly") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> low(-5e6, -2e5);
    std::uniform_real_distribution<double> mid(2e5, 3e6);
    std::uniform_real_distribution<double> high(3.2e6, 9e6);

    int built = 0;
    while (built < 25) {
        BistableCase bc;
        if (!make_bistable_case(low(rng), mid(rng), high(rng), &bc)) continue;
        if (bc.roots[1] - bc.roots[0] < 1e5 || bc.roots[2] - bc.roots[1] < 1e5)
            continue;
        ++built;

        // Realize kappa and K with physical inputs: mass carries K.
        PhysicalParams p = reference_params();
        p.cavity_halfwidth = bc.kappa;
        DriveParams d;
        d.pump_power = 1e-3;
        DerivedConstants c = derive_constants(p, d);
        p.mirror_mass = c.coupling * c.coupling * c.pump_amplitude *
                        c.pump_amplitude /
                        (kHbar * p.mech_freq * p.mech_freq * bc.big_k);
        c = derive_constants(p, d);
        CHECK(rel_close(big_k_of(p, c), bc.big_k, 1e-12));

        const auto states = steady_state_self_consistent(bc.bare_detuning, c, p);
        REQUIRE(states.size() == 3);
        for (int i = 0; i < 3; ++i) {
            CHECK(rel_close(states[i].eff_detuning, bc.roots[i], 1e-6));
            CHECK(states[i].residual < 1e-10);
        }

        const auto oracle =
            scan_roots(bc.bare_detuning, big_k_of(p, c), bc.kappa, 200000);
        REQUIRE(oracle.size() == 3);
    }
}
