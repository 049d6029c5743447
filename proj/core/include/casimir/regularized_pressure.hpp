#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "casimir/cutoff.hpp"
#include "casimir/euler_maclaurin.hpp"
#include "casimir/mode_spectrum.hpp"

namespace casimir {

/// Regularized per-k_z pressure profile
///   G_a(u) = u^2 int_0^inf f_a(sqrt(s + u^2)) / sqrt(s + u^2) ds = 2 u^2 int_u^inf f_a(p) dp.
class GaProfile {
 public:
  explicit GaProfile(CutoffSpec cutoff, QuadratureOptions quadrature = {});

  [[nodiscard]] const CutoffSpec& cutoff() const noexcept { return cutoff_; }

  [[nodiscard]] double operator()(double u) const;
  [[nodiscard]] double derivative(double u) const;
  [[nodiscard]] double second_derivative(double u) const;

  /// int_0^inf G_a du = (2/3) int_0^inf p^3 f_a(p) dp.
  [[nodiscard]] double integral() const;
  /// int_u^inf G_a dv.
  [[nodiscard]] double integral_from(double u) const;

  /// Sign changes of G_a'' in increasing order. The scan runs over a u in
  /// (0, 64]; beyond that G_a'' > 0 for every supported family.
  [[nodiscard]] std::vector<double> inflection_points() const;

 private:
  CutoffSpec cutoff_;
  QuadratureOptions quadrature_;
};

[[nodiscard]] double G(const CutoffSpec& cutoff, double u, const QuadratureOptions& options = {});

/// Step profile sampling G_a at the lattice point nearest u:
///   ConductorPermeable  G_a(floor(u) + 1/2)
///   ConductorConductor  G_a(floor(u + 1/2))
/// so that int_0^inf H_a du equals the lattice sum.
[[nodiscard]] double H(const CutoffSpec& cutoff, PlateKind kind, double u,
                       const QuadratureOptions& options = {});

/// Odd derivatives G_a'(0), G_a'''(0), ..., G_a^{(2K-1)}(0), analytic per family.
[[nodiscard]] std::vector<double> odd_derivatives_at_zero(const CutoffSpec& cutoff, int count);

/// Same, exact, for a rational regulator parameter (a = 0 gives the a -> 0 limit).
[[nodiscard]] std::vector<Rational> odd_derivatives_at_zero(CutoffFamily family, int power,
                                                            const Rational& a, int count);

[[nodiscard]] LatticeVariant lattice_variant(PlateKind kind) noexcept;

struct LatticeOptions {
  QuadratureOptions quadrature{};
  double relative_term_tol = 1e-16;  ///< stop once a term is below this times |partial sum|
  double absolute_tail_tol = 1e-14;  ///< ... and the certified remainder is below this
  std::size_t max_terms = 4'000'000;
};

struct LatticeDifference {
  double value = 0.0;       ///< sum_lattice G_a - int_0^inf G_a
  double tail_bound = 0.0;  ///< certified bound on the truncated remainder
  std::size_t terms = 0;
};

/// The dimensionless difference D(a). Log-concave cutoffs use a geometric
/// remainder bound on the sum; others pair the sum with the integral cell by
/// cell and bound the remainder by |G_a'(U)| / 8 past the last inflection point.
[[nodiscard]] LatticeDifference lattice_difference(const CutoffSpec& cutoff, PlateKind kind,
                                                   const LatticeOptions& options = {});

[[nodiscard]] double D(const CutoffSpec& cutoff, PlateKind kind,
                       const LatticeOptions& options = {});

struct DSample {
  double a;
  double value;
};

struct Extrapolation {
  double value = 0.0;
  double error = 0.0;
  bool monotone = true;          ///< successive diagonal differences shrank
  std::vector<double> diagonal;  ///< Richardson estimates of increasing order
  std::string warning;
};

/// Richardson extrapolation to a -> 0 under D(a) = D* + c2 a^2 + c4 a^4 + ...
/// Needs >= 3 samples with distinct positive a.
[[nodiscard]] Extrapolation extrapolate(std::span<const DSample> samples);

[[nodiscard]] std::vector<double> default_a_grid();

struct PressureEstimate {
  PlateConfig config;
  CutoffSpec cutoff;
  std::vector<DSample> D_of_a;
  std::vector<double> tail_bounds;
  double D_star = 0.0;
  double P_physical = 0.0;  ///< (pi/4) D_star / l^4, natural units, > 0 is repulsive
  double err_estimate = 0.0;
  std::vector<std::string> warnings;
};

/// Evaluates D over the grid (in parallel when `parallel`), extrapolates and
/// scales by (pi/4) / l^4. The regulator parameter of `cutoff` is ignored.
[[nodiscard]] PressureEstimate pressure(const PlateConfig& config, const CutoffSpec& cutoff,
                                        std::span<const double> a_grid,
                                        const LatticeOptions& options = {},
                                        bool parallel = true);

/// (pi/4) / l^4 D*.
[[nodiscard]] double pressure_from_difference(double d_star, double separation);

}  // namespace casimir
