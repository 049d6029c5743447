#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace casimir {

using Rational = boost::multiprecision::cpp_rational;

/// Where the sum samples f: integers 0, 1, 2, ... (half weight at 0), or
/// midpoints 1/2, 3/2, 5/2, ...
enum class LatticeVariant { IntegerLattice, MidpointLattice };

inline constexpr int kMaxEulerMaclaurinOrder = 8;
inline constexpr int kMaxBernoulliIndex = 60;

/// Exact Bernoulli number B_n (B_1 = -1/2), n <= 60. Odd n > 1 is rejected.
[[nodiscard]] Rational bernoulli(int n);

/// Correction coefficients c_1..c_K:
///   IntegerLattice   c_k = B_{2k} / (2k)!
///   MidpointLattice  c_k = (1 - 2^{1-2k}) B_{2k} / (2k)!
struct EMExpansion {
  LatticeVariant variant;
  int order;
  std::vector<Rational> coefficients;

  /// Weight multiplying f^{(2k-1)}(0) in sum - integral (k is 1-based):
  /// +c_k on the midpoint lattice, -c_k on the integer lattice.
  [[nodiscard]] Rational weight(int k) const;
};

[[nodiscard]] EMExpansion make_expansion(LatticeVariant variant, int order);

struct CorrectionSeries {
  double value = 0.0;
  std::vector<double> terms;  ///< one entry per order k = 1..K
  bool diverging = false;     ///< a nonzero term grew relative to the previous nonzero one
};

/// Euler-Maclaurin prediction of  sum_lattice f - int_0^inf f  from the odd
/// derivatives f'(0), f'''(0), ... (f and its derivatives must vanish at infinity).
/// Needs at least `order` derivatives.
[[nodiscard]] CorrectionSeries correction_series(std::span<const double> odd_derivatives,
                                                 LatticeVariant variant, int order);

[[nodiscard]] double tail_correction(std::span<const double> odd_derivatives,
                                     LatticeVariant variant, int order);

/// Exact rational evaluation, for derivative data that is itself rational.
[[nodiscard]] Rational tail_correction(std::span<const Rational> odd_derivatives,
                                       LatticeVariant variant, int order);

}  // namespace casimir
