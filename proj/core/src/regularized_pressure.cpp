#include "casimir/regularized_pressure.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "casimir/errors.hpp"
#include "detail/quadrature.hpp"

namespace casimir {
namespace {

using std::numbers::pi;

constexpr double kInflectionScanEnd = 64.0;  // in units of 1/a
constexpr double kInflectionScanStep = 1.0 / 128.0;

void require_u(double u) {
  if (!std::isfinite(u) || u < 0.0) {
    throw DomainError("G_a: u must be finite and >= 0, got " + std::to_string(u));
  }
}

// f^{(j)}(0) for the unit-argument regulator, times a^j.
template <class T>
T cutoff_derivative_at_zero(CutoffFamily family, int power, const T& a, int j) {
  T a_pow = 1;
  for (int i = 0; i < j; ++i) a_pow *= a;
  T fact = 1;
  for (int i = 2; i <= j; ++i) fact *= i;
  switch (family) {
    case CutoffFamily::Exponential:
      return (j % 2 == 0) ? a_pow : T(-a_pow);
    case CutoffFamily::Gaussian: {
      if (j % 2 != 0) return T(0);
      // exp(-x^2) = sum (-1)^i x^{2i} / i!
      const int i = j / 2;
      T ifact = 1;
      for (int k = 2; k <= i; ++k) ifact *= k;
      const T mag = a_pow * fact / ifact;
      return (i % 2 == 0) ? mag : T(-mag);
    }
    case CutoffFamily::RationalPower: {
      // 1/(1 + x^m) = sum (-1)^i x^{i m}
      if (j % power != 0) return T(0);
      const int i = j / power;
      const T mag = a_pow * fact;
      return (i % 2 == 0) ? mag : T(-mag);
    }
  }
  return T(0);
}

// G(u) = 2 u^2 T(u) and T(u) = T(0) - int_0^u f, so for n >= 3
// G^{(n)}(0) = -2 n (n-1) f^{(n-3)}(0); G'(0) = 0.
template <class T>
std::vector<T> odd_derivatives(CutoffFamily family, int power, const T& a, int count) {
  if (count < 1) throw DomainError("odd_derivatives_at_zero: count must be >= 1");
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) {
    const int n = 2 * k - 1;
    if (n < 3) {
      out.emplace_back(0);
      continue;
    }
    out.push_back(T(-2 * n * (n - 1)) * cutoff_derivative_at_zero<T>(family, power, a, n - 3));
  }
  return out;
}

// Closed-form G_a and its integral in extended precision. The lattice sum is
// of order a^-4 while D(a) is O(10^-2), so double rounding in the terms would
// dominate D at the small end of the a-grid.
struct ExtendedProfile {
  CutoffFamily family;
  long double a;

  [[nodiscard]] long double operator()(long double u) const {
    const long double x = a * u;
    if (family == CutoffFamily::Exponential) return 2.0L * u * u * std::exp(-x) / a;
    return 2.0L * u * u * std::sqrt(std::numbers::pi_v<long double>) / (2.0L * a) *
           std::erfc(x);
  }

  [[nodiscard]] long double integral() const {
    const long double a4 = a * a * a * a;
    return family == CutoffFamily::Exponential ? 4.0L / a4 : 1.0L / (3.0L * a4);
  }
};

LatticeDifference geometric_sum(const CutoffSpec& cutoff, double offset, bool half_first,
                                const LatticeOptions& opt) {
  const ExtendedProfile g{cutoff.family(), cutoff.a()};
  detail::CompensatedSum<long double> sum;
  long double previous = 0.0L;
  long double bound = std::numeric_limits<long double>::infinity();
  for (std::size_t n = 0; n < opt.max_terms; ++n) {
    long double term = g(static_cast<long double>(n) + offset);
    if (n == 0 && half_first) term *= 0.5L;
    sum.add(term);
    // G_a is log-concave here, so G(u+1)/G(u) never increases once it drops
    // below 1 and the remainder is at most term * r / (1 - r).
    if (previous > 0.0L && term < previous) {
      const long double r = term / previous;
      bound = term * r / (1.0L - r);
      if (term <= opt.relative_term_tol * std::abs(sum.value()) &&
          bound <= opt.absolute_tail_tol) {
        return {static_cast<double>(sum.value() - g.integral()), static_cast<double>(bound),
                n + 1};
      }
    }
    previous = term;
  }
  std::ostringstream msg;
  msg << "lattice sum for cutoff " << cutoff.label() << " (a = " << cutoff.a()
      << ") not certified after " << opt.max_terms << " terms (remainder bound "
      << static_cast<double>(bound) << ")";
  throw TailBoundError(msg.str());
}

// Cell-paired route: cells [n, n+1] carry G at the midpoint (half-integer
// lattice) or the trapezoid end values (integer lattice). Past the last
// inflection point G'' keeps one sign, and both rules have Peano kernels
// bounded by 1/8, so the remainder beyond U is at most |G'(U)| / 8.
LatticeDifference paired_sum(const GaProfile& g, PlateKind kind, const LatticeOptions& opt) {
  const auto inflections = g.inflection_points();
  const double certify_from = inflections.empty() ? 0.0 : inflections.back();
  const bool midpoint = kind == PlateKind::ConductorPermeable;
  detail::CompensatedSum<> sum;
  const double g0 = midpoint ? 0.0 : g(0.0);
  double bound = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < opt.max_terms; ++n) {
    const double upper = static_cast<double>(n + 1);
    double edge = 0.0;
    if (midpoint) {
      sum.add(g(static_cast<double>(n) + 0.5));
    } else {
      if (n > 0) sum.add(g(static_cast<double>(n)));
    }
    if (upper < certify_from) continue;
    bound = std::abs(g.derivative(upper)) / 8.0;
    if (bound <= opt.absolute_tail_tol) {
      if (!midpoint) edge = 0.5 * (g0 + g(upper));
      const double cells = sum.value() + edge;
      const double covered = g.integral() - g.integral_from(upper);
      return {cells - covered, bound, n + 1};
    }
  }
  std::ostringstream msg;
  msg << "cutoff " << g.cutoff().label() << " (a = " << g.cutoff().a()
      << ") decays too slowly: remainder bound " << bound << " after " << opt.max_terms
      << " cells";
  throw TailBoundError(msg.str());
}

}  // namespace

GaProfile::GaProfile(CutoffSpec cutoff, QuadratureOptions quadrature)
    : cutoff_(cutoff), quadrature_(quadrature) {}

double GaProfile::operator()(double u) const {
  require_u(u);
  if (u == 0.0) return 0.0;
  return 2.0 * u * u * tail_integral(cutoff_, u, quadrature_);
}

double GaProfile::derivative(double u) const {
  require_u(u);
  return 4.0 * u * tail_integral(cutoff_, u, quadrature_) - 2.0 * u * u * evaluate(cutoff_, u);
}

double GaProfile::second_derivative(double u) const {
  require_u(u);
  return 4.0 * tail_integral(cutoff_, u, quadrature_) - 8.0 * u * evaluate(cutoff_, u) -
         2.0 * u * u * evaluate_derivative(cutoff_, u);
}

double GaProfile::integral() const { return 2.0 / 3.0 * third_moment(cutoff_); }

double GaProfile::integral_from(double u) const {
  return 2.0 / 3.0 * third_moment_tail(cutoff_, u, quadrature_);
}

std::vector<double> GaProfile::inflection_points() const {
  const double scale = 1.0 / cutoff_.a();
  const auto g2 = [this](double u) { return second_derivative(u); };
  std::vector<double> roots;
  double lo = 0.0;
  double f_lo = g2(lo);
  const int steps = static_cast<int>(kInflectionScanEnd / kInflectionScanStep);
  for (int i = 1; i <= steps; ++i) {
    const double hi = i * kInflectionScanStep * scale;
    const double f_hi = g2(hi);
    if (f_hi == 0.0) {
      roots.push_back(hi);
    } else if (f_lo != 0.0 && (f_lo < 0.0) != (f_hi < 0.0)) {
      boost::uintmax_t iterations = 200;
      const auto [left, right] = boost::math::tools::toms748_solve(
          g2, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(52), iterations);
      roots.push_back(0.5 * (left + right));
    }
    lo = hi;
    f_lo = f_hi;
  }
  return roots;
}

double G(const CutoffSpec& cutoff, double u, const QuadratureOptions& options) {
  return GaProfile(cutoff, options)(u);
}

double H(const CutoffSpec& cutoff, PlateKind kind, double u, const QuadratureOptions& options) {
  require_u(u);
  const double node = kind == PlateKind::ConductorPermeable ? std::floor(u) + 0.5
                                                            : std::floor(u + 0.5);
  return G(cutoff, node, options);
}

std::vector<double> odd_derivatives_at_zero(const CutoffSpec& cutoff, int count) {
  return odd_derivatives<double>(cutoff.family(), cutoff.power(), cutoff.a(), count);
}

std::vector<Rational> odd_derivatives_at_zero(CutoffFamily family, int power, const Rational& a,
                                              int count) {
  if (family == CutoffFamily::RationalPower && power < 5) {
    throw DomainError("rational cutoff needs m >= 5");
  }
  return odd_derivatives<Rational>(family, power, a, count);
}

LatticeVariant lattice_variant(PlateKind kind) noexcept {
  return kind == PlateKind::ConductorPermeable ? LatticeVariant::MidpointLattice
                                               : LatticeVariant::IntegerLattice;
}

LatticeDifference lattice_difference(const CutoffSpec& cutoff, PlateKind kind,
                                     const LatticeOptions& options) {
  if (is_log_concave(cutoff)) {
    const bool midpoint = kind == PlateKind::ConductorPermeable;
    return geometric_sum(cutoff, midpoint ? 0.5 : 0.0, !midpoint, options);
  }
  return paired_sum(GaProfile(cutoff, options.quadrature), kind, options);
}

double D(const CutoffSpec& cutoff, PlateKind kind, const LatticeOptions& options) {
  return lattice_difference(cutoff, kind, options).value;
}

Extrapolation extrapolate(std::span<const DSample> samples) {
  if (samples.size() < 3) {
    throw DomainError("extrapolate: need at least 3 samples, got " +
                      std::to_string(samples.size()));
  }
  std::vector<DSample> sorted(samples.begin(), samples.end());
  for (const auto& s : sorted) {
    if (!std::isfinite(s.a) || s.a <= 0.0 || !std::isfinite(s.value)) {
      throw DomainError("extrapolate: samples need finite a > 0 and finite D(a)");
    }
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const DSample& l, const DSample& r) { return l.a > r.a; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].a == sorted[i - 1].a) {
      throw DomainError("extrapolate: sample abscissae must be distinct");
    }
  }

  // Neville table in x = a^2; row i uses samples 0..i, column k eliminates a^{2k}.
  const std::size_t n = sorted.size();
  std::vector<std::vector<double>> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = sorted[i].a * sorted[i].a;
    table[i].push_back(sorted[i].value);
    for (std::size_t k = 1; k <= i; ++k) {
      const double xk = sorted[i - k].a * sorted[i - k].a;
      const double prev = table[i][k - 1];
      table[i].push_back(prev + (prev - table[i - 1][k - 1]) / (xk / xi - 1.0));
    }
  }

  Extrapolation out;
  for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(table[i][i]);
  std::vector<double> diffs;  // diffs[k-1] = |diag[k] - diag[k-1]|
  for (std::size_t k = 1; k < n; ++k) {
    diffs.push_back(std::abs(out.diagonal[k] - out.diagonal[k - 1]));
  }
  // differences at roundoff level carry no ordering information
  double scale = 0.0;
  for (const auto& s : sorted) scale = std::max(scale, std::abs(s.value));
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  for (std::size_t k = 1; k < diffs.size(); ++k) {
    if (diffs[k] > diffs[k - 1] && diffs[k] > noise) out.monotone = false;
  }

  if (out.monotone) {
    out.value = out.diagonal.back();
    out.error = diffs.back();
    return out;
  }

  // Fall back to the estimate after the smallest step; report the largest
  // step taken from there on (or the last two when that is the final one).
  const auto best = static_cast<std::size_t>(
      std::min_element(diffs.begin(), diffs.end()) - diffs.begin());
  out.value = out.diagonal[best + 1];
  out.error = *std::max_element(diffs.begin() + static_cast<std::ptrdiff_t>(best), diffs.end());
  if (best + 1 == diffs.size()) out.error = std::max(out.error, diffs[best - 1]);
  std::ostringstream msg;
  msg << "Richardson differences are not monotone; using order " << best + 1
      << " estimate with inflated error";
  out.warning = msg.str();
  return out;
}

std::vector<double> default_a_grid() { return {0.4, 0.2, 0.1, 0.05, 0.025}; }

double pressure_from_difference(double d_star, double separation) {
  return pi / 4.0 * d_star / detail::ipow(separation, 4);
}

PressureEstimate pressure(const PlateConfig& config, const CutoffSpec& cutoff,
                          std::span<const double> a_grid, const LatticeOptions& options,
                          bool parallel) {
  std::vector<LatticeDifference> results(a_grid.size(),
                                         LatticeDifference{});
  if (parallel && a_grid.size() > 1) {
    std::vector<std::future<LatticeDifference>> jobs;
    jobs.reserve(a_grid.size());
    for (const double a : a_grid) {
      const CutoffSpec spec = cutoff.with_a(a);
      jobs.push_back(std::async(std::launch::async, [spec, &config, &options] {
        return lattice_difference(spec, config.kind(), options);
      }));
    }
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < a_grid.size(); ++i) {
      results[i] = lattice_difference(cutoff.with_a(a_grid[i]), config.kind(), options);
    }
  }

  PressureEstimate est{config, cutoff, {}, {}, 0.0, 0.0, 0.0, {}};
  for (std::size_t i = 0; i < a_grid.size(); ++i) {
    est.D_of_a.push_back({a_grid[i], results[i].value});
    est.tail_bounds.push_back(results[i].tail_bound);
  }
  const Extrapolation ex = extrapolate(est.D_of_a);
  est.D_star = ex.value;
  est.err_estimate = ex.error;
  if (!ex.warning.empty()) est.warnings.push_back(ex.warning);
  const bool mixed_signs = std::any_of(est.D_of_a.begin(), est.D_of_a.end(), [&](const DSample& s) {
    return (s.value < 0.0) != (est.D_star < 0.0);
  });
  if (mixed_signs) {
    est.warnings.push_back("D(a) changes sign across the a-grid; coarse grid points are far from the a -> 0 limit");
  }
  est.P_physical = pressure_from_difference(est.D_star, config.separation());
  return est;
}

}  // namespace casimir
