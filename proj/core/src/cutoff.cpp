#include "casimir/cutoff.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"
#include "detail/quadrature.hpp"

namespace casimir {
namespace {

using std::numbers::pi;

void require_finite_nonnegative(double p, const char* what) {
  if (!std::isfinite(p) || p < 0.0) {
    throw DomainError(std::string(what) + ": argument must be finite and >= 0, got " +
                      std::to_string(p));
  }
}

// Unit-scale pieces of the rational family, x = a p, r(x) = 1/(1+x^m).

double rational_total(int m) { return (pi / m) / std::sin(pi / m); }

double rational_third_moment(int m) { return (pi / m) / std::sin(4.0 * pi / m); }

// int_X^inf r(x) dx. Below X = 1 the head [0, X] is subtracted from the total;
// above it x = X/t maps the tail onto (0, 1] and X^{1-m} is factored out.
double rational_tail_unit(int m, double x_lo, const QuadratureOptions& opt) {
  if (x_lo == 0.0) return rational_total(m);
  if (x_lo < 1.0) {
    const double head = detail::integrate(
        [m](double x) { return 1.0 / (1.0 + detail::ipow(x, m)); }, 0.0, x_lo, opt,
        "rational tail integral");
    return rational_total(m) - head;
  }
  const double inv = 1.0 / x_lo;
  const double body = detail::integrate(
      [m, inv](double t) {
        return detail::ipow(t, m - 2) / (1.0 + detail::ipow(t * inv, m));
      },
      0.0, 1.0, opt, "rational tail integral");
  return std::pow(x_lo, 1 - m) * body;
}

// int_X^inf (x^3 - X^3) r(x) dx.
double rational_third_moment_tail_unit(int m, double x_lo, const QuadratureOptions& opt) {
  if (x_lo == 0.0) return rational_third_moment(m);
  if (x_lo < 1.0) {
    const double head = detail::integrate(
        [m](double x) { return detail::ipow(x, 3) / (1.0 + detail::ipow(x, m)); }, 0.0,
        x_lo, opt, "rational third-moment tail");
    return rational_third_moment(m) - head -
           x_lo * x_lo * x_lo * rational_tail_unit(m, x_lo, opt);
  }
  const double inv = 1.0 / x_lo;
  const double body = detail::integrate(
      [m, inv](double t) {
        return (1.0 - t * t * t) * detail::ipow(t, m - 5) /
               (1.0 + detail::ipow(t * inv, m));
      },
      0.0, 1.0, opt, "rational third-moment tail");
  return std::pow(x_lo, 4 - m) * body;
}

}  // namespace

CutoffSpec::CutoffSpec(CutoffFamily family, int power, double a)
    : family_(family), power_(power), a_(a) {
  if (!std::isfinite(a) || a <= 0.0) {
    throw DomainError("cutoff parameter a must be finite and > 0, got " + std::to_string(a));
  }
  if (family == CutoffFamily::RationalPower && power < 5) {
    throw DomainError("rational cutoff needs m >= 5, got m = " + std::to_string(power));
  }
}

CutoffSpec CutoffSpec::exponential(double a) { return {CutoffFamily::Exponential, 0, a}; }

CutoffSpec CutoffSpec::gaussian(double a) { return {CutoffFamily::Gaussian, 0, a}; }

CutoffSpec CutoffSpec::rational_power(int m, double a) {
  return {CutoffFamily::RationalPower, m, a};
}

CutoffSpec CutoffSpec::parse(std::string_view family, double a) {
  if (family == "exp") return exponential(a);
  if (family == "gauss") return gaussian(a);
  if (family.starts_with("rat:")) {
    const auto digits = family.substr(4);
    int m = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc{} && end == digits.data() + digits.size()) {
      return rational_power(m, a);
    }
  }
  throw DomainError("unknown cutoff '" + std::string(family) +
                    "' (expected exp, gauss or rat:<m>)");
}

CutoffSpec CutoffSpec::with_a(double a) const { return {family_, power_, a}; }

std::string CutoffSpec::label() const {
  switch (family_) {
    case CutoffFamily::Exponential:
      return "exp";
    case CutoffFamily::Gaussian:
      return "gauss";
    case CutoffFamily::RationalPower:
      return "rat:" + std::to_string(power_);
  }
  return {};
}

double evaluate(const CutoffSpec& spec, double p) {
  require_finite_nonnegative(p, "cutoff evaluate");
  const double x = spec.a() * p;
  switch (spec.family()) {
    case CutoffFamily::Exponential:
      return std::exp(-x);
    case CutoffFamily::Gaussian:
      return std::exp(-x * x);
    case CutoffFamily::RationalPower:
      return 1.0 / (1.0 + detail::ipow(x, spec.power()));
  }
  return 0.0;
}

double evaluate_derivative(const CutoffSpec& spec, double p) {
  require_finite_nonnegative(p, "cutoff derivative");
  const double a = spec.a();
  const double x = a * p;
  switch (spec.family()) {
    case CutoffFamily::Exponential:
      return -a * std::exp(-x);
    case CutoffFamily::Gaussian:
      return -2.0 * a * x * std::exp(-x * x);
    case CutoffFamily::RationalPower: {
      const int m = spec.power();
      const double denom = 1.0 + detail::ipow(x, m);
      return -a * m * detail::ipow(x, m - 1) / (denom * denom);
    }
  }
  return 0.0;
}

double tail_integral(const CutoffSpec& spec, double u, const QuadratureOptions& options) {
  require_finite_nonnegative(u, "tail_integral");
  const double a = spec.a();
  switch (spec.family()) {
    case CutoffFamily::Exponential:
      return std::exp(-a * u) / a;
    case CutoffFamily::Gaussian:
      return std::sqrt(pi) / (2.0 * a) * std::erfc(a * u);
    case CutoffFamily::RationalPower:
      return rational_tail_unit(spec.power(), a * u, options) / a;
  }
  return 0.0;
}

double third_moment(const CutoffSpec& spec) {
  const double a4 = detail::ipow(spec.a(), 4);
  switch (spec.family()) {
    case CutoffFamily::Exponential:
      return 6.0 / a4;
    case CutoffFamily::Gaussian:
      return 0.5 / a4;
    case CutoffFamily::RationalPower:
      return rational_third_moment(spec.power()) / a4;
  }
  return 0.0;
}

double third_moment_tail(const CutoffSpec& spec, double u, const QuadratureOptions& options) {
  require_finite_nonnegative(u, "third_moment_tail");
  const double a = spec.a();
  const double a4 = detail::ipow(a, 4);
  const double x = a * u;
  switch (spec.family()) {
    case CutoffFamily::Exponential:
      return std::exp(-x) * (3.0 * x * x + 6.0 * x + 6.0) / a4;
    case CutoffFamily::Gaussian:
      return (0.5 * std::exp(-x * x) * (x * x + 1.0) -
              x * x * x * 0.5 * std::sqrt(pi) * std::erfc(x)) /
             a4;
    case CutoffFamily::RationalPower:
      return rational_third_moment_tail_unit(spec.power(), x, options) / a4;
  }
  return 0.0;
}

bool is_log_concave(const CutoffSpec& spec) noexcept {
  return spec.family() != CutoffFamily::RationalPower;
}

}  // namespace casimir
