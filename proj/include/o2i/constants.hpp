#pragma once

#include <numbers>

namespace o2i {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = std::numbers::pi;

// Fraction of the first Fresnel radius that must stay clear for a LoS link.
inline constexpr double kClearanceRatio = 0.6;

inline double wavelength(double frequency_hz) { return kSpeedOfLight / frequency_hz; }

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

} // namespace o2i
