#pragma once

// CODATA 2018 exact/recommended values used for SI output. All numerics run
// in natural units (hbar = c = 1); these enter only when results are printed.

namespace casimir::codata {

inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double speed_of_light = 299792458.0;  // m / s
inline constexpr double hbar_c = hbar * speed_of_light;  // J m

/// Natural-unit pressure (separation measured in metres) to pascal.
[[nodiscard]] constexpr double pressure_to_pascal(double natural) noexcept {
  return natural * hbar_c;
}

/// Natural angular frequency (1/m) to rad/s.
[[nodiscard]] constexpr double frequency_to_si(double natural) noexcept {
  return natural * speed_of_light;
}

}  // namespace casimir::codata
