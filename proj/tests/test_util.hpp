#ifndef OMIT_TESTS_TEST_UTIL_HPP
#define OMIT_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <complex>

#include "omit/params.hpp"

namespace omit_test {

// Reference hardware set used throughout (matches configs/aspelmeyer.cfg).
inline omit::PhysicalParams reference_params() {
    return {0.025,                       // cavity_length [m]
            1.064e-6,                    // pump_wavelength [m]
            145e-9,                      // mirror_mass [kg]
            omit::hz_to_radps(215e3),    // cavity_halfwidth
            omit::hz_to_radps(947e3),    // mech_freq
            omit::hz_to_radps(141.0)};   // mech_damping
}

inline bool rel_close(double a, double b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return true;
    return std::abs(a - b) <= tol * scale;
}

inline bool rel_close(std::complex<double> a, std::complex<double> b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return true;
    return std::abs(a - b) <= tol * scale;
}

// A detuning self-consistency problem with three known roots, built from the
// cubic's Vieta relations: for roots r1 < r2 < r3,
//   kappa^2 = r1 r2 + r1 r3 + r2 r3,   Delta0 = r1 + r2 + r3,
//   K = Delta0 kappa^2 - r1 r2 r3.
// Valid whenever the pair sum and K are positive. The caller realizes K
// physically via the mirror mass.
struct BistableCase {
    double kappa = 0.0;
    double bare_detuning = 0.0;
    double big_k = 0.0;
    double roots[3] = {0.0, 0.0, 0.0};
};

inline bool make_bistable_case(double r1, double r2, double r3,
                               BistableCase* out) {
    const double pair_sum = r1 * r2 + r1 * r3 + r2 * r3;
    const double sum = r1 + r2 + r3;
    const double k_value = sum * pair_sum - r1 * r2 * r3;
    if (!(pair_sum > 0.0) || !(k_value > 0.0)) return false;
    out->kappa = std::sqrt(pair_sum);
    out->bare_detuning = sum;
    out->big_k = k_value;
    out->roots[0] = r1;
    out->roots[1] = r2;
    out->roots[2] = r3;
    return true;
}

// Expected values computed independently with 50-digit arithmetic from the
// reference hardware set; frozen here to 17 significant digits.
namespace frozen {

inline constexpr double cavity_freq = 1.7703492173955388e15;     // [rad/s]
inline constexpr double coupling = 7.4678415636533654e-18;       // chi0 [N]
inline constexpr double two_over_kappa = 1.4805110985292589e-6;  // [s]

// |eps_c|^2 at P_c = 1 mW.
inline constexpr double pump_flux_1mw = 1.4471489032316756e22;

// alpha at Delta = omega_m.
inline constexpr double alpha_1mw = 2.0556073515460680e8;
inline constexpr double alpha_400uw = 8.2224294061842722e7;
inline constexpr double alpha_10uw = 2.0556073515460680e6;

// q0 at P_c = 1 mW, Delta = omega_m.
inline constexpr double mirror_pos_1mw = 5.6544911748327673e-16;

// 2 kappa c_plus at P_c = 1 mW, Delta = omega_m.
inline constexpr std::complex<double> lambda_center_1mw{
    1.6673599107623992, -0.0062025187339491873};
inline constexpr std::complex<double> lambda_off_1mw{  // delta = 1.002 omega_m
    1.9994475028531688, 0.0028439343774385408};

// Analytic group delay at delta = Delta = omega_m.
inline constexpr double tau_400uw_g141 = -3.6099371311246431e-4;
inline constexpr double tau_10uw_g141 = -7.5084472389199440e-6;
inline constexpr double tau_1mw_g141 = -9.3780088618219034e-4;
inline constexpr double tau_400uw_g120 = -5.0031374316150151e-4;

// Self-consistency constant K = chi0^2 |eps_c|^2 / (hbar m omega_m^2) at
// 1 mW, and the bare detuning whose root lands exactly at omega_m.
inline constexpr double big_k_1mw = 1.4907319273941387e15;
inline constexpr double bare_detuning_root_at_wm_1mw = 5.9502165275951729e6;

}  // namespace frozen
}  // namespace omit_test

#endif  // OMIT_TESTS_TEST_UTIL_HPP
