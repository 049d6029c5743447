#include "casimir/mode_spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

using std::numbers::pi;

void require_positive(double x, const char* what) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError(std::string(what) + " must be finite and > 0, got " + std::to_string(x));
  }
}

}  // namespace

PlateConfig::PlateConfig(PlateKind kind, double separation, double volume)
    : kind_(kind), separation_(separation), volume_(volume) {
  require_positive(separation, "plate separation l");
  require_positive(volume, "quantization volume V");
}

double PlateConfig::omega0() const noexcept { return pi / separation_; }

double PlateConfig::lattice_offset() const noexcept {
  return kind_ == PlateKind::ConductorPermeable ? 0.5 : 0.0;
}

const char* to_string(PlateKind kind) noexcept {
  return kind == PlateKind::ConductorConductor ? "cc" : "cp";
}

double rho0(double omega, double volume) {
  if (!std::isfinite(omega) || omega < 0.0) {
    throw DomainError("rho0: omega must be finite and >= 0");
  }
  require_positive(volume, "rho0: volume");
  return volume * omega * omega / (pi * pi);
}

double staircase(const PlateConfig& config, double omega, const StepConvention& steps) {
  require_positive(omega, "omega");
  const double x = omega / config.omega0();
  const double offset = config.lattice_offset();
  // Modes sit at x_n = n + offset. The conductor-conductor n = 0 mode at x = 0
  // carries weight 1/2 and is below every omega > 0.
  const double shifted = x - offset;
  const double below = std::floor(shifted);
  const bool on_threshold = shifted == below && shifted >= 0.0;
  if (on_threshold && steps.reject_thresholds) {
    throw ThresholdError("omega/omega0 = " + std::to_string(x) +
                         " lies on a lattice threshold of the " +
                         to_string(config.kind()) + " spectrum");
  }
  double count = 0.0;
  if (shifted > 0.0) {
    // number of lattice points n >= first with n + offset < x
    count = on_threshold ? below : below + 1.0;
  }
  if (on_threshold) count += steps.theta_at_zero;
  if (config.kind() == PlateKind::ConductorConductor) {
    // the n = 0 term was counted with weight 1 above; the half-weight reading
    // replaces it by 1/2 (the shifted > 0 branch always includes it)
    count -= 0.5;
  }
  return count;
}

double rho_ratio(const PlateConfig& config, double omega, const StepConvention& steps) {
  return staircase(config, omega, steps) * config.omega0() / omega;
}

SpectralSample spectral_sample(const PlateConfig& config, double omega,
                               const StepConvention& steps) {
  const double ratio = rho_ratio(config, omega, steps);
  return {omega, ratio * rho0(omega, config.volume()), ratio};
}

double excess_fraction(const PlateConfig& config, std::size_t periods) {
  if (periods == 0) throw DomainError("excess_fraction: periods must be >= 1");
  // Between consecutive thresholds the staircase is a constant c and
  // rho_ratio = c / x, so rho_ratio > 1 exactly on (lo, min(hi, c)).
  const double end = static_cast<double>(periods);
  const double offset = config.lattice_offset();
  const double base = config.kind() == PlateKind::ConductorConductor ? 0.5 : 0.0;
  double measure = 0.0;
  double lo = 0.0;
  double count = base;
  for (double next = offset == 0.0 ? 1.0 : offset; lo < end; next += 1.0) {
    const double hi = std::min(next, end);
    const double upper = std::min(hi, count);
    if (upper > lo) measure += upper - lo;
    lo = hi;
    count += 1.0;
  }
  return measure / end;
}

double mode_pressure(double omega, double kz_over_k, double volume) {
  if (!std::isfinite(omega) || omega < 0.0) {
    throw DomainError("mode_pressure: omega must be finite and >= 0");
  }
  if (!(kz_over_k >= 0.0 && kz_over_k <= 1.0)) {
    throw DomainError("mode_pressure: k_z/k must lie in [0, 1], got " +
                      std::to_string(kz_over_k));
  }
  require_positive(volume, "mode_pressure: volume");
  return omega / (2.0 * volume) * kz_over_k * kz_over_k;
}

}  // namespace casimir
