#pragma once

#include <cmath>
#include <sstream>

#include <algorithm>
#include <queue>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "casimir/cutoff.hpp"
#include "casimir/errors.hpp"

namespace casimir::detail {

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& o) const noexcept { return error < o.error; }
};

/// One 21-point Kronrod panel with its embedded 10-point Gauss rule.
/// Error estimate |K - G|, floored at a few ulps of the absolute integrand mass.
template <class F>
Panel kronrod_panel(F& f, double lo, double hi) {
  using boost::math::quadrature::gauss;
  using boost::math::quadrature::gauss_kronrod;
  const auto& x = gauss_kronrod<double, 21>::abscissa();
  const auto& wk = gauss_kronrod<double, 21>::weights();
  const auto& wg = gauss<double, 10>::weights();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(mid);
  double kron = wk[0] * fc;
  double gaus = 0.0;
  double mass = std::abs(kron);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double dx = half * x[i];
    const double pair = f(mid - dx) + f(mid + dx);
    kron += wk[i] * pair;
    mass += wk[i] * (std::abs(f(mid - dx)) + std::abs(f(mid + dx)));
    if (i % 2 == 1) gaus += wg[i / 2] * pair;
  }
  const double err = std::max(std::abs(kron - gaus), 10.0 * 2.220446049250313e-16 * mass);
  return {lo, hi, kron * half, err * half};
}

/// Globally adaptive Gauss-Kronrod on a finite interval: the panel with the
/// largest error is bisected until the summed error is below
/// max(abs_tol, rel_tol * |I|). Throws QuadratureError with the residual otherwise.
template <class F>
double integrate(F&& f, double lo, double hi, const QuadratureOptions& opt, const char* what) {
  if (lo == hi) return 0.0;
  std::priority_queue<Panel> panels;
  panels.push(kronrod_panel(f, lo, hi));
  double value = panels.top().value;
  double error = panels.top().error;
  for (unsigned i = 0; i < opt.max_subdivisions; ++i) {
    if (error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value))) return value;
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = kronrod_panel(f, worst.lo, mid);
    const Panel right = kronrod_panel(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  if (error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(value)) && std::isfinite(value)) {
    return value;
  }
  std::ostringstream msg;
  msg << what << ": quadrature on [" << lo << ", " << hi << "] did not converge (residual "
      << error << ")";
  throw QuadratureError(msg.str(), error);
}

inline double ipow(double x, int n) {
  double r = 1.0;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

/// Compensated (Neumaier) accumulator.
template <class T = double>
class CompensatedSum {
 public:
  void add(T x) noexcept {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] T value() const noexcept { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

}  // namespace casimir::detail
