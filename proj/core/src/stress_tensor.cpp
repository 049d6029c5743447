#include "casimir/stress_tensor.hpp"

#include <cmath>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/regularized_pressure.hpp"

namespace casimir {
namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

const char* to_string(ForceVerdict v) noexcept {
  switch (v) {
    case ForceVerdict::Attraction:
      return "attraction";
    case ForceVerdict::Repulsion:
      return "repulsion";
    case ForceVerdict::NoForce:
      return "no force";
  }
  return "";
}

Tensor4 tensor_components(double C) {
  require_finite(C, "stress tensor constant C");
  Tensor4 t{};
  for (int mu = 0; mu < 4; ++mu) {
    for (int lambda = 0; lambda < 4; ++lambda) {
      if (mu != lambda) continue;
      const double zz = mu == 3 ? 1.0 : 0.0;
      t[mu][lambda] = C * (0.25 * metric(mu, lambda) - zz) + 0.0;  // no -0
    }
  }
  return t;
}

double energy_density(double C) {
  require_finite(C, "stress tensor constant C");
  return -0.25 * C + 0.0;
}

double plate_force(double C) {
  require_finite(C, "stress tensor constant C");
  return -0.75 * C + 0.0;
}

double metric_trace(const Tensor4& t) noexcept {
  // g_{mu lambda} is diagonal and equal to g^{mu lambda} for this signature
  double trace = 0.0;
  for (int mu = 0; mu < 4; ++mu) trace += metric(mu, mu) * t[mu][mu];
  return trace;
}

double force_from_scaling(double epsilon_coeff, double separation) {
  require_finite(epsilon_coeff, "energy coefficient");
  if (!std::isfinite(separation) || separation <= 0.0) {
    throw DomainError("force_from_scaling: separation must be finite and > 0");
  }
  const double w = epsilon_coeff / (separation * separation * separation) / separation;
  return 3.0 * w;
}

StressTensorState::StressTensorState(double C) : C_(C) {
  require_finite(C, "stress tensor constant C");
}

ForceVerdict StressTensorState::verdict() const noexcept {
  const double f = -0.75 * C_;
  if (f > 0.0) return ForceVerdict::Repulsion;
  if (f < 0.0) return ForceVerdict::Attraction;
  return ForceVerdict::NoForce;
}

StressTensorState link_to_pressure(double pressure) {
  require_finite(pressure, "pressure");
  return StressTensorState(-4.0 / 3.0 * pressure);
}

StressTensorState link_to_pressure(const PressureEstimate& result) {
  return link_to_pressure(result.P_physical);
}

}  // namespace casimir
