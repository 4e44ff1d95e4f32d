#ifndef OMIT_CONSTANTS_HPP
#define OMIT_CONSTANTS_HPP

namespace omit {

// SI constants. c is exact by definition; hbar is the 2019 SI value.
inline constexpr double kSpeedOfLight = 299792458.0;        // m/s
inline constexpr double kHbar = 1.054571817e-34;            // J s
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Ordinary frequency [Hz] -> angular frequency [rad/s]. All model code works
// in rad/s; this conversion is applied once at the configuration boundary.
inline constexpr double hz_to_radps(double f_hz) { return kTwoPi * f_hz; }

}  // namespace omit

#endif  // OMIT_CONSTANTS_HPP
