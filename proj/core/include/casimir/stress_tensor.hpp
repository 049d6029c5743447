#pragma once

#include <array>

namespace casimir {

struct PressureEstimate;

using Tensor4 = std::array<std::array<double, 4>, 4>;

/// Minkowski metric diag(-1, 1, 1, 1).
[[nodiscard]] constexpr double metric(int mu, int lambda) noexcept {
  if (mu != lambda) return 0.0;
  return mu == 0 ? -1.0 : 1.0;
}

enum class ForceVerdict { Attraction, Repulsion, NoForce };

[[nodiscard]] const char* to_string(ForceVerdict v) noexcept;

/// <T^{mu lambda}> = C (g^{mu lambda} / 4 - z^mu z^lambda), z = (0, 0, 0, 1).
[[nodiscard]] Tensor4 tensor_components(double C);

/// w = <T^00> = -C/4.
[[nodiscard]] double energy_density(double C);

/// F_z = <T^33> = -3C/4 = 3 w.
[[nodiscard]] double plate_force(double C);

/// g_{mu lambda} T^{mu lambda}.
[[nodiscard]] double metric_trace(const Tensor4& t) noexcept;

/// -d/dl of eps(l) = coeff * l^-3, i.e. 3 coeff / l^4 = 3 (eps / l).
[[nodiscard]] double force_from_scaling(double epsilon_coeff, double separation);

/// Planar vacuum stress state fixed by one constant C.
class StressTensorState {
 public:
  explicit StressTensorState(double C);

  [[nodiscard]] double C() const noexcept { return C_; }
  [[nodiscard]] Tensor4 components() const { return tensor_components(C_); }
  [[nodiscard]] double energy_density() const { return casimir::energy_density(C_); }
  [[nodiscard]] double plate_force() const { return casimir::plate_force(C_); }
  [[nodiscard]] ForceVerdict verdict() const noexcept;

 private:
  double C_;
};

/// State whose plate force equals the estimate's pressure: C = -(4/3) P.
[[nodiscard]] StressTensorState link_to_pressure(const PressureEstimate& result);
[[nodiscard]] StressTensorState link_to_pressure(double pressure);

}  // namespace casimir
