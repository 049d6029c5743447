#include "casimir/euler_maclaurin.hpp"

#include <array>
#include <cmath>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

using boost::multiprecision::cpp_int;

// B_0..B_60 from  sum_{k=0}^{n} C(n+1, k) B_k = 0.
const std::array<Rational, kMaxBernoulliIndex + 1>& bernoulli_table() {
  static const auto table = [] {
    std::array<Rational, kMaxBernoulliIndex + 1> b;
    b[0] = 1;
    for (int n = 1; n <= kMaxBernoulliIndex; ++n) {
      Rational acc = 0;
      cpp_int binom = 1;  // C(n+1, 0)
      for (int k = 0; k < n; ++k) {
        acc += Rational(binom) * b[k];
        binom = binom * (n + 1 - k) / (k + 1);
      }
      b[n] = -acc / (n + 1);
    }
    return b;
  }();
  return table;
}

Rational factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

void check_order(int order, std::size_t available) {
  if (order < 1 || order > kMaxEulerMaclaurinOrder) {
    throw DomainError("Euler-Maclaurin order must lie in [1, " +
                      std::to_string(kMaxEulerMaclaurinOrder) + "], got " +
                      std::to_string(order));
  }
  if (available < static_cast<std::size_t>(order)) {
    throw DomainError("Euler-Maclaurin order " + std::to_string(order) + " needs " +
                      std::to_string(order) + " odd derivatives, got " +
                      std::to_string(available));
  }
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0 || n > kMaxBernoulliIndex) {
    throw DomainError("bernoulli: index must lie in [0, 60], got " + std::to_string(n));
  }
  if (n > 1 && n % 2 == 1) {
    throw DomainError("bernoulli: B_" + std::to_string(n) + " is zero for odd n > 1");
  }
  return bernoulli_table()[n];
}

Rational EMExpansion::weight(int k) const {
  const Rational& c = coefficients.at(static_cast<std::size_t>(k - 1));
  return variant == LatticeVariant::MidpointLattice ? c : Rational(-c);
}

EMExpansion make_expansion(LatticeVariant variant, int order) {
  check_order(order, static_cast<std::size_t>(order));
  EMExpansion e{variant, order, {}};
  e.coefficients.reserve(static_cast<std::size_t>(order));
  for (int k = 1; k <= order; ++k) {
    Rational c = bernoulli(2 * k) / factorial(2 * k);
    if (variant == LatticeVariant::MidpointLattice) {
      // 1 - 2^{1-2k}
      const cpp_int pow2 = cpp_int(1) << (2 * k - 1);
      c *= Rational(pow2 - 1, pow2);
    }
    e.coefficients.push_back(c);
  }
  return e;
}

CorrectionSeries correction_series(std::span<const double> odd_derivatives,
                                   LatticeVariant variant, int order) {
  check_order(order, odd_derivatives.size());
  const EMExpansion e = make_expansion(variant, order);
  CorrectionSeries out;
  out.terms.reserve(static_cast<std::size_t>(order));
  double previous = 0.0;
  for (int k = 1; k <= order; ++k) {
    const double term = static_cast<double>(e.weight(k)) * odd_derivatives[k - 1];
    if (term != 0.0) {
      if (previous != 0.0 && std::abs(term) > std::abs(previous)) out.diverging = true;
      previous = term;
    }
    out.terms.push_back(term);
    out.value += term;
  }
  return out;
}

double tail_correction(std::span<const double> odd_derivatives, LatticeVariant variant,
                       int order) {
  return correction_series(odd_derivatives, variant, order).value;
}

Rational tail_correction(std::span<const Rational> odd_derivatives, LatticeVariant variant,
                         int order) {
  check_order(order, odd_derivatives.size());
  const EMExpansion e = make_expansion(variant, order);
  Rational sum = 0;
  for (int k = 1; k <= order; ++k) sum += e.weight(k) * odd_derivatives[k - 1];
  return sum;
}

}  // namespace casimir
