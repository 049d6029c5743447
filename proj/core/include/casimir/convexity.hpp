#pragma once

#include <cstddef>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "casimir/cutoff.hpp"

namespace casimir {

enum class Curvature {
  Convex,   ///< G_a'' > 0 throughout the interval
  Concave,  ///< G_a'' < 0 throughout the interval
  Mixed     ///< an inflection point lies inside
};

[[nodiscard]] const char* to_string(Curvature c) noexcept;

/// Comparison of the step profile H_a with G_a on [n, n+1] (half-integer lattice).
struct IntervalReport {
  std::size_t n;
  double area_H;  ///< G_a(n + 1/2)
  double area_G;  ///< int_n^{n+1} G_a
  double delta;   ///< area_H - area_G
  Curvature curvature;
};

struct Decomposition {
  std::vector<IntervalReport> intervals;
  double tail = 0.0;        ///< sum of delta over the intervals past the reported ones
  double tail_bound = 0.0;  ///< certified bound on what is left after `tail`

  [[nodiscard]] double total() const;
};

/// Signed area differences grouped by curvature class.
struct CurvatureBalance {
  double convex = 0.0;
  double concave = 0.0;
  double mixed = 0.0;
};

[[nodiscard]] CurvatureBalance balance(const Decomposition& d);

/// G_a''(u) = 4 T(u) - 8 u f_a(u) - 2 u^2 f_a'(u), T the tail integral.
[[nodiscard]] double second_derivative_G(const CutoffSpec& cutoff, double u,
                                         const QuadratureOptions& options = {});

/// Midpoint value minus integral of an arbitrary smooth g on [lo, hi]
/// (30-point Gauss-Legendre for the integral).
template <class F>
[[nodiscard]] double midpoint_delta(F&& g, double lo, double hi) {
  const double area = boost::math::quadrature::gauss<double, 30>::integrate(g, lo, hi);
  return (hi - lo) * g(0.5 * (lo + hi)) - area;
}

/// Reports for [0,1), ..., [N-1, N) plus the remainder; total() reproduces D(a)
/// for the conductor-permeable lattice.
[[nodiscard]] Decomposition interval_decomposition(const CutoffSpec& cutoff, std::size_t intervals,
                                                   const QuadratureOptions& options = {});

/// Smallest N whose certified remainder is below `tail_tol`.
[[nodiscard]] Decomposition interval_decomposition(const CutoffSpec& cutoff,
                                                   const QuadratureOptions& options = {},
                                                   double tail_tol = 1e-12);

}  // namespace casimir
