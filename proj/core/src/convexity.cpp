#include "casimir/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/regularized_pressure.hpp"
#include "detail/quadrature.hpp"

namespace casimir {
namespace {

constexpr std::size_t kMaxIntervals = 4'000'000;

struct Context {
  GaProfile profile;
  std::vector<double> inflections;
  QuadratureOptions quadrature;
};

IntervalReport report(const Context& ctx, std::size_t n) {
  const double lo = static_cast<double>(n);
  const double hi = lo + 1.0;
  const double area_h = ctx.profile(lo + 0.5);
  const double area_g = detail::integrate([&](double u) { return ctx.profile(u); }, lo, hi,
                                          ctx.quadrature, "interval area");
  Curvature c;
  const bool crosses = std::any_of(ctx.inflections.begin(), ctx.inflections.end(),
                                   [&](double r) { return r > lo && r < hi; });
  if (crosses) {
    c = Curvature::Mixed;
  } else {
    c = ctx.profile.second_derivative(lo + 0.5) > 0.0 ? Curvature::Convex : Curvature::Concave;
  }
  return {n, area_h, area_g, area_h - area_g, c};
}

// First integer >= start past the last inflection with |G'(N)| / 8 <= tol.
std::size_t certified_end(const Context& ctx, std::size_t start, double tol) {
  const double last = ctx.inflections.empty() ? 0.0 : ctx.inflections.back();
  auto n = std::max<std::size_t>(start, static_cast<std::size_t>(std::ceil(last)));
  n = std::max<std::size_t>(n, 1);
  for (; n < kMaxIntervals; ++n) {
    if (std::abs(ctx.profile.derivative(static_cast<double>(n))) / 8.0 <= tol) return n;
  }
  std::ostringstream msg;
  msg << "interval decomposition: remainder not below " << tol << " within " << kMaxIntervals
      << " intervals";
  throw TailBoundError(msg.str());
}

Decomposition decompose(const Context& ctx, std::size_t intervals, double tail_tol) {
  const std::size_t end = certified_end(ctx, intervals, tail_tol);
  Decomposition d;
  d.intervals.reserve(intervals);
  for (std::size_t n = 0; n < intervals; ++n) d.intervals.push_back(report(ctx, n));
  detail::CompensatedSum<> tail;
  for (std::size_t n = intervals; n < end; ++n) tail.add(report(ctx, n).delta);
  d.tail = tail.value();
  d.tail_bound = std::abs(ctx.profile.derivative(static_cast<double>(end))) / 8.0;
  return d;
}

}  // namespace

const char* to_string(Curvature c) noexcept {
  switch (c) {
    case Curvature::Convex:
      return "convex";
    case Curvature::Concave:
      return "concave";
    case Curvature::Mixed:
      return "mixed";
  }
  return "";
}

double Decomposition::total() const {
  detail::CompensatedSum<> s;
  for (const auto& r : intervals) s.add(r.delta);
  s.add(tail);
  return s.value();
}

CurvatureBalance balance(const Decomposition& d) {
  CurvatureBalance b;
  for (const auto& r : d.intervals) {
    switch (r.curvature) {
      case Curvature::Convex:
        b.convex += r.delta;
        break;
      case Curvature::Concave:
        b.concave += r.delta;
        break;
      case Curvature::Mixed:
        b.mixed += r.delta;
        break;
    }
  }
  return b;
}

double second_derivative_G(const CutoffSpec& cutoff, double u, const QuadratureOptions& options) {
  if (!std::isfinite(u) || u <= 0.0) {
    throw DomainError("second_derivative_G: u must be finite and > 0");
  }
  return GaProfile(cutoff, options).second_derivative(u);
}

Decomposition interval_decomposition(const CutoffSpec& cutoff, std::size_t intervals,
                                     const QuadratureOptions& options) {
  if (intervals == 0) throw DomainError("interval_decomposition: N must be >= 1");
  const GaProfile profile(cutoff, options);
  const Context ctx{profile, profile.inflection_points(), options};
  return decompose(ctx, intervals, 1e-12);
}

Decomposition interval_decomposition(const CutoffSpec& cutoff, const QuadratureOptions& options,
                                     double tail_tol) {
  const GaProfile profile(cutoff, options);
  const Context ctx{profile, profile.inflection_points(), options};
  return decompose(ctx, certified_end(ctx, 1, tail_tol), tail_tol);
}

}  // namespace casimir
