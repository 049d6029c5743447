#pragma once

#include <cstddef>

namespace casimir {

/// Boundary pair. ConductorConductor has the integer lattice k_z = n pi / l;
/// ConductorPermeable the half-integer lattice k_z = (n + 1/2) pi / l.
enum class PlateKind { ConductorConductor, ConductorPermeable };

/// Plate pair with separation l and quantization volume V (natural units, c = 1).
class PlateConfig {
 public:
  PlateConfig(PlateKind kind, double separation, double volume = 1.0);

  [[nodiscard]] PlateKind kind() const noexcept { return kind_; }
  [[nodiscard]] double separation() const noexcept { return separation_; }
  [[nodiscard]] double volume() const noexcept { return volume_; }

  /// Lattice spacing in frequency, omega0 = pi c / l.
  [[nodiscard]] double omega0() const noexcept;

  /// Offset of the k_z lattice in units of pi/l: 0 (integer) or 1/2 (half-integer).
  [[nodiscard]] double lattice_offset() const noexcept;

 private:
  PlateKind kind_;
  double separation_;
  double volume_;
};

[[nodiscard]] const char* to_string(PlateKind kind) noexcept;

/// How the Heaviside step is evaluated exactly on a lattice threshold.
struct StepConvention {
  bool reject_thresholds = true;  ///< throw ThresholdError on a threshold
  double theta_at_zero = 0.5;     ///< theta(0) when thresholds are not rejected
};

struct SpectralSample {
  double omega;
  double rho;
  double rho_ratio;
};

/// Free-space mode density V omega^2 / (pi^2 c^3), c = 1.
[[nodiscard]] double rho0(double omega, double volume);

/// rho / rho0 for the plate pair: (omega0/omega) times the number of k_z modes
/// below omega, with the n = 0 conductor-conductor mode counted with weight 1/2.
[[nodiscard]] double rho_ratio(const PlateConfig& config, double omega,
                               const StepConvention& steps = {});

[[nodiscard]] SpectralSample spectral_sample(const PlateConfig& config, double omega,
                                             const StepConvention& steps = {});

/// Mode-count staircase rho_ratio * omega / omega0.
[[nodiscard]] double staircase(const PlateConfig& config, double omega,
                               const StepConvention& steps = {});

/// Fraction of (0, periods * omega0) on which rho_ratio > 1, computed exactly
/// interval by interval on the staircase.
[[nodiscard]] double excess_fraction(const PlateConfig& config, std::size_t periods);

/// Zero-point radiation pressure of one mode, (hbar omega / 2V) (k_z/k)^2 with hbar = 1.
[[nodiscard]] double mode_pressure(double omega, double kz_over_k, double volume);

}  // namespace casimir
