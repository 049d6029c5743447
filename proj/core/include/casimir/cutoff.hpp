#pragma once

#include <string>
#include <string_view>

namespace casimir {

/// Settings for the adaptive Gauss-Kronrod integrator (rational cutoff, cell areas).
///
/// Integrals handed to the integrator are first rescaled to be O(1) (see
/// cutoff.cpp), so `abs_tol` is an absolute tolerance on a unit-size quantity.
/// Refinement stops once the summed error is below max(abs_tol, rel_tol |I|).
struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-13;
  unsigned max_subdivisions = 200;
};

enum class CutoffFamily { Exponential, Gaussian, RationalPower };

/// A regulator f_a(p) from one of three families:
///   Exponential       exp(-a p)
///   Gaussian          exp(-(a p)^2)
///   RationalPower(m)  1 / (1 + (a p)^m),  m >= 5
/// All satisfy f_a(0) = 1, f_a -> 1 pointwise as a -> 0, and decay fast enough
/// that u^2 times the tail integral stays integrable.
class CutoffSpec {
 public:
  static CutoffSpec exponential(double a);
  static CutoffSpec gaussian(double a);
  static CutoffSpec rational_power(int m, double a);

  /// Parses "exp", "gauss" or "rat:<m>".
  static CutoffSpec parse(std::string_view family, double a);

  [[nodiscard]] CutoffFamily family() const noexcept { return family_; }
  [[nodiscard]] double a() const noexcept { return a_; }
  /// Exponent m of the rational family (0 for the others).
  [[nodiscard]] int power() const noexcept { return power_; }

  /// Same family, different regulator parameter.
  [[nodiscard]] CutoffSpec with_a(double a) const;

  /// Canonical family label as accepted by parse().
  [[nodiscard]] std::string label() const;

  friend bool operator==(const CutoffSpec&, const CutoffSpec&) = default;

 private:
  CutoffSpec(CutoffFamily family, int power, double a);

  CutoffFamily family_;
  int power_;
  double a_;
};

/// f_a(p). Throws DomainError for negative or non-finite p.
[[nodiscard]] double evaluate(const CutoffSpec& spec, double p);

/// df_a/dp.
[[nodiscard]] double evaluate_derivative(const CutoffSpec& spec, double p);

/// int_u^inf f_a(p) dp. Closed form for Exponential and Gaussian; adaptive
/// quadrature for RationalPower (throws QuadratureError carrying the residual).
[[nodiscard]] double tail_integral(const CutoffSpec& spec, double u,
                                   const QuadratureOptions& options = {});

/// int_0^inf p^3 f_a(p) dp, closed form for every family.
[[nodiscard]] double third_moment(const CutoffSpec& spec);

/// int_u^inf (p^3 - u^3) f_a(p) dp, i.e. 3 * int_u^inf (int_v^inf f) v^2 dv.
[[nodiscard]] double third_moment_tail(const CutoffSpec& spec, double u,
                                       const QuadratureOptions& options = {});

/// True when f_a is log-concave (Exponential, Gaussian). Lattice sums of
/// log-concave profiles admit a geometric remainder bound.
[[nodiscard]] bool is_log_concave(const CutoffSpec& spec) noexcept;

}  // namespace casimir
