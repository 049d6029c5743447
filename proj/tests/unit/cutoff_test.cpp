#include "casimir/cutoff.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "casimir/errors.hpp"

namespace casimir {
namespace {

std::vector<CutoffSpec> families(double a) {
  return {CutoffSpec::exponential(a), CutoffSpec::gaussian(a), CutoffSpec::rational_power(6, a),
          CutoffSpec::rational_power(8, a)};
}

// Term-by-term series for int_u^inf 1/(1 + (a p)^m) dp.
double rational_tail_series(int m, double a, double u) {
  const double x = a * u;
  double sum = 0.0;
  if (x > 1.0) {
    for (int k = 0; k < 400; ++k) {
      const double e = m * (k + 1) - 1.0;
      sum += ((k % 2) ? -1.0 : 1.0) * std::pow(x, -e) / e;
    }
  } else {
    const double total = (std::numbers::pi / m) / std::sin(std::numbers::pi / m);
    double head = 0.0;
    for (int k = 0; k < 4000; ++k) {
      const double e = m * k + 1.0;
      const double t = std::pow(x, e) / e;
      head += ((k % 2) ? -1.0 : 1.0) * t;
      if (t < 1e-18) break;
    }
    sum = total - head;
  }
  return sum / a;
}

TEST(Cutoff, EvaluateExamples) {
  EXPECT_EQ(evaluate(CutoffSpec::exponential(1.0), 0.0), 1.0);
  EXPECT_NEAR(evaluate(CutoffSpec::gaussian(0.5), 2.0), std::exp(-1.0), 1e-15);
  const auto spec = CutoffSpec::exponential(0.1);
  EXPECT_NEAR(evaluate(spec, 50.0), 0.006737946999085467, 1e-15);
  for (double p = 50.0; p < 5000.0; p += 0.25) ASSERT_LE(evaluate(spec, p), 0.01);
}

TEST(Cutoff, ValueOneAtOrigin) {
  for (double a : {1e-3, 0.1, 1.0, 7.5}) {
    for (const auto& spec : families(a)) EXPECT_EQ(evaluate(spec, 0.0), 1.0) << spec.label();
  }
}

TEST(Cutoff, NonIncreasing) {
  for (const auto& spec : families(0.7)) {
    double prev = evaluate(spec, 0.0);
    for (double p = 1e-3; p < 40.0; p += 1e-3) {
      const double v = evaluate(spec, p);
      ASSERT_LE(v, prev) << spec.label() << " p=" << p;
      prev = v;
    }
  }
}

TEST(Cutoff, PointwiseLimit) {
  for (const auto& base : families(1.0)) {
    for (double p : {0.5, 3.0, 20.0}) {
      double prev = 1.0;
      for (double a = 1.0; a > 1e-6; a *= 0.5) {
        const double gap = 1.0 - evaluate(base.with_a(a), p);
        ASSERT_LE(gap, prev + 1e-15);
        prev = gap;
      }
      EXPECT_LT(prev, 1e-4) << base.label() << " p=" << p;
    }
  }
}

TEST(Cutoff, TailExamples) {
  EXPECT_DOUBLE_EQ(tail_integral(CutoffSpec::exponential(2.0), 0.0), 0.5);
  EXPECT_NEAR(tail_integral(CutoffSpec::gaussian(1.0), 0.0), std::sqrt(std::numbers::pi) / 2, 1e-15);
  EXPECT_NEAR(tail_integral(CutoffSpec::rational_power(6, 1.0), 0.0), std::numbers::pi / 3, 1e-12);
}

TEST(Cutoff, RationalTailMatchesSeries) {
  for (int m : {5, 6, 8, 11}) {
    for (double a : {0.05, 1.0, 3.0}) {
      const auto spec = CutoffSpec::rational_power(m, a);
      for (double x : {0.0, 0.2, 0.7, 0.95, 1.05, 1.6, 4.0, 30.0}) {
        const double u = x / a;
        const double expect = rational_tail_series(m, a, u);
        EXPECT_NEAR(tail_integral(spec, u), expect, 1e-12 * std::max(1.0, std::abs(expect)))
            << "m=" << m << " a=" << a << " u=" << u;
      }
    }
  }
}

TEST(Cutoff, TailDecreasesToZero) {
  for (const auto& spec : families(0.8)) {
    double prev = tail_integral(spec, 0.0);
    for (double u = 0.05; u < 60.0; u += 0.05) {
      const double t = tail_integral(spec, u);
      ASSERT_LE(t, prev + 1e-15) << spec.label();
      ASSERT_GE(t, 0.0);
      prev = t;
    }
    EXPECT_LT(prev, 1e-6) << spec.label();
  }
}

TEST(Cutoff, TailDerivativeIsMinusCutoff) {
  const double h = 1e-5;
  for (const auto& spec : families(0.6)) {
    for (double u : {0.3, 1.0, 2.5, 6.0}) {
      const double fd = (tail_integral(spec, u + h) - tail_integral(spec, u - h)) / (2 * h);
      const double f = evaluate(spec, u);
      EXPECT_NEAR(-fd, f, 1e-6 * f) << spec.label() << " u=" << u;
    }
  }
}

TEST(Cutoff, DerivativeMatchesFiniteDifference) {
  const double h = 1e-6;
  for (const auto& spec : families(0.9)) {
    for (double p : {0.4, 1.3, 3.0}) {
      const double fd = (evaluate(spec, p + h) - evaluate(spec, p - h)) / (2 * h);
      EXPECT_NEAR(evaluate_derivative(spec, p), fd, 1e-8) << spec.label();
    }
  }
}

TEST(Cutoff, ThirdMoment) {
  EXPECT_DOUBLE_EQ(third_moment(CutoffSpec::exponential(0.5)), 6.0 / 0.0625);
  EXPECT_DOUBLE_EQ(third_moment(CutoffSpec::gaussian(0.5)), 0.5 / 0.0625);
  // int p^3 / (1 + p^8) = pi / 8 / sin(pi / 2)
  EXPECT_NEAR(third_moment(CutoffSpec::rational_power(8, 1.0)), std::numbers::pi / 8, 1e-14);
  for (const auto& spec : families(0.9)) {
    EXPECT_NEAR(third_moment_tail(spec, 0.0), third_moment(spec), 1e-12) << spec.label();
    // d/du of int_u^inf (p^3 - u^3) f = -3 u^2 T(u)
    const double u = 1.7, h = 1e-5;
    const double fd = (third_moment_tail(spec, u + h) - third_moment_tail(spec, u - h)) / (2 * h);
    EXPECT_NEAR(fd, -3 * u * u * tail_integral(spec, u), 1e-7) << spec.label();
  }
}

TEST(Cutoff, Parse) {
  EXPECT_EQ(CutoffSpec::parse("exp", 0.3), CutoffSpec::exponential(0.3));
  EXPECT_EQ(CutoffSpec::parse("gauss", 0.3), CutoffSpec::gaussian(0.3));
  EXPECT_EQ(CutoffSpec::parse("rat:7", 0.3), CutoffSpec::rational_power(7, 0.3));
  EXPECT_EQ(CutoffSpec::rational_power(7, 1.0).label(), "rat:7");
  EXPECT_THROW((void)CutoffSpec::parse("rat:4", 1.0), DomainError);
  EXPECT_THROW((void)CutoffSpec::parse("rat:", 1.0), DomainError);
  EXPECT_THROW((void)CutoffSpec::parse("rat:8x", 1.0), DomainError);
  EXPECT_THROW((void)CutoffSpec::parse("lorentz", 1.0), DomainError);
}

TEST(Cutoff, RejectsBadInput) {
  EXPECT_THROW((void)CutoffSpec::exponential(0.0), DomainError);
  EXPECT_THROW((void)CutoffSpec::gaussian(-1.0), DomainError);
  EXPECT_THROW((void)CutoffSpec::exponential(std::numeric_limits<double>::quiet_NaN()), DomainError);
  const auto spec = CutoffSpec::exponential(1.0);
  EXPECT_THROW((void)evaluate(spec, -1.0), DomainError);
  EXPECT_THROW((void)evaluate(spec, std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW((void)tail_integral(spec, -0.5), DomainError);
  EXPECT_FALSE(is_log_concave(CutoffSpec::rational_power(6, 1.0)));
  EXPECT_TRUE(is_log_concave(CutoffSpec::gaussian(1.0)));
}

}  // namespace
}  // namespace casimir
