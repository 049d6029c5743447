#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/codata.hpp"
#include "casimir/convexity.hpp"
#include "casimir/errors.hpp"
#include "casimir/mode_spectrum.hpp"
#include "casimir/regularized_pressure.hpp"
#include "casimir/stress_tensor.hpp"

namespace casimir::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { Table, Csv, Json };
enum class Units { Natural, SI };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  bool csv = false;
  std::optional<double> tol;
  std::string units = "natural";

  [[nodiscard]] Format format() const {
    if (json) return Format::Json;
    if (csv) return Format::Csv;
    return Format::Table;
  }
  [[nodiscard]] Units unit_system() const {
    return units == "si" ? Units::SI : Units::Natural;
  }
  [[nodiscard]] LatticeOptions lattice() const {
    LatticeOptions opt;
    if (tol) {
      opt.quadrature.abs_tol = *tol;
      opt.absolute_tail_tol = *tol;
    }
    return opt;
  }
};

// Shortest round-trip representation; independent of the global locale.
std::string num(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

Json header(std::string_view command, const Globals& g) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["units"] = g.unit_system() == Units::SI ? "si" : "natural";
  return doc;
}

void print_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
}

PlateKind parse_kind(const std::string& s) {
  return s == "cc" ? PlateKind::ConductorConductor : PlateKind::ConductorPermeable;
}

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> grid;
  std::string_view rest = csv;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || end != item.data() + item.size()) {
      throw UsageError("--a-grid: cannot parse '" + std::string(item) + "' as a number");
    }
    grid.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return grid;
}

const char* verdict_for(double force) {
  if (force > 0.0) return to_string(ForceVerdict::Repulsion);
  if (force < 0.0) return to_string(ForceVerdict::Attraction);
  return to_string(ForceVerdict::NoForce);
}

// ---------------------------------------------------------------- density

struct DensityArgs {
  std::string config;
  double l = 1.0;
  double omega_max = 0.0;
  std::size_t samples = 100;
  double theta0 = 0.5;
};

int run_density(const DensityArgs& args, const Globals& g, std::ostream& out, std::ostream& err) {
  if (args.samples == 0) throw DomainError("--samples must be >= 1");
  const PlateConfig config(parse_kind(args.config), args.l);
  // SI: l in metres, omega in rad/s; natural omega is omega / c.
  const double omega_max =
      g.unit_system() == Units::SI ? args.omega_max / codata::speed_of_light : args.omega_max;
  if (!std::isfinite(omega_max) || omega_max <= 0.0) throw DomainError("--omega-max must be > 0");
  const StepConvention steps{false, args.theta0};

  std::vector<std::pair<double, double>> rows;
  std::size_t on_threshold = 0;
  for (std::size_t i = 1; i <= args.samples; ++i) {
    const double omega = omega_max * static_cast<double>(i) / static_cast<double>(args.samples);
    try {
      (void)rho_ratio(config, omega);
    } catch (const ThresholdError&) {
      ++on_threshold;
    }
    rows.emplace_back(omega / config.omega0(), rho_ratio(config, omega, steps));
  }
  if (on_threshold > 0) {
    err << "warning: " << on_threshold << " sample(s) fall on a lattice threshold; theta(0) = "
        << num(args.theta0) << " applied\n";
  }

  switch (g.format()) {
    case Format::Json: {
      Json doc = header("density", g);
      doc["config"] = args.config;
      doc["separation"] = args.l;
      doc["theta0"] = args.theta0;
      Json samples = Json::array();
      for (const auto& [x, r] : rows) samples.push_back({{"omega_over_omega0", x}, {"rho_ratio", r}});
      doc["samples"] = samples;
      write_json(out, doc);
      break;
    }
    case Format::Csv:
    case Format::Table:
      out << "omega_over_omega0,rho_ratio\n";
      for (const auto& [x, r] : rows) out << num(x) << ',' << num(r) << '\n';
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- pressure

struct PressureArgs {
  std::string config;
  std::string cutoff = "exp";
  std::string a_grid;
  double l = 1.0;
  std::string oracle = "none";
  int em_order = 3;
  bool serial = false;
};

int run_pressure(const PressureArgs& args, const Globals& g, std::ostream& out) {
  const std::vector<double> grid = args.a_grid.empty() ? default_a_grid() : parse_grid(args.a_grid);
  const PlateConfig config(parse_kind(args.config), args.l);
  const CutoffSpec family = CutoffSpec::parse(args.cutoff, 1.0);
  const PressureEstimate est = pressure(config, family, grid, g.lattice(), !args.serial);
  const bool si = g.unit_system() == Units::SI;
  const double p = si ? codata::pressure_to_pascal(est.P_physical) : est.P_physical;
  const char* p_unit = si ? "Pa" : "hbar*c/l^4 (l in length units)";

  std::optional<CorrectionSeries> em_limit;
  std::vector<CorrectionSeries> em_per_a;
  const LatticeVariant variant = lattice_variant(config.kind());
  if (args.oracle == "em") {
    // a -> 0: f^{(j)}(0) = 0 for j >= 1, so only G'''(0) = -12 survives
    const auto exact = odd_derivatives_at_zero(family.family(), family.power(), Rational(0),
                                               args.em_order);
    std::vector<double> limit_derivs;
    for (const auto& r : exact) limit_derivs.push_back(static_cast<double>(r));
    em_limit = correction_series(limit_derivs, variant, args.em_order);
    for (const double a : grid) {
      const auto d = odd_derivatives_at_zero(family.with_a(a), args.em_order);
      em_per_a.push_back(correction_series(d, variant, args.em_order));
    }
  }

  switch (g.format()) {
    case Format::Json: {
      Json doc = header("pressure", g);
      doc["config"] = args.config;
      doc["cutoff"] = family.label();
      doc["separation"] = args.l;
      doc["a_grid"] = grid;
      Json samples = Json::array();
      for (std::size_t i = 0; i < est.D_of_a.size(); ++i) {
        samples.push_back({{"a", est.D_of_a[i].a},
                           {"D", est.D_of_a[i].value},
                           {"tail_bound", est.tail_bounds[i]}});
      }
      doc["D_of_a"] = samples;
      doc["D_star"] = est.D_star;
      doc["err_estimate"] = est.err_estimate;
      doc["P_physical"] = p;
      doc["P_unit"] = p_unit;
      doc["verdict"] = verdict_for(est.P_physical);
      doc["warnings"] = est.warnings;
      if (em_limit) {
        Json em;
        em["variant"] = variant == LatticeVariant::MidpointLattice ? "midpoint" : "integer";
        em["order"] = args.em_order;
        em["limit"] = em_limit->value;
        Json per_a = Json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
          per_a.push_back({{"a", grid[i]},
                           {"prediction", em_per_a[i].value},
                           {"diverging", em_per_a[i].diverging}});
        }
        em["D_of_a"] = per_a;
        doc["em_oracle"] = em;
      }
      write_json(out, doc);
      break;
    }
    case Format::Csv: {
      out << "a,D,tail_bound" << (em_limit ? ",em_prediction" : "") << '\n';
      for (std::size_t i = 0; i < est.D_of_a.size(); ++i) {
        out << num(est.D_of_a[i].a) << ',' << num(est.D_of_a[i].value) << ','
            << num(est.tail_bounds[i]);
        if (em_limit) out << ',' << num(em_per_a[i].value);
        out << '\n';
      }
      // a = 0 row: extrapolated limit, error estimate in the bound column
      out << "0," << num(est.D_star) << ',' << num(est.err_estimate);
      if (em_limit) out << ',' << num(em_limit->value);
      out << '\n';
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> rows{
          {"configuration", args.config},
          {"cutoff", family.label()},
          {"separation", num(args.l)},
          {"", ""},
          {"a", "D(a)", "tail bound"}};
      for (std::size_t i = 0; i < est.D_of_a.size(); ++i) {
        rows.push_back({num(est.D_of_a[i].a), num(est.D_of_a[i].value), num(est.tail_bounds[i])});
      }
      rows.push_back({"", ""});
      rows.push_back({"D* (a -> 0)", num(est.D_star)});
      rows.push_back({"error estimate", num(est.err_estimate)});
      if (em_limit) rows.push_back({"Euler-Maclaurin", num(em_limit->value)});
      rows.push_back({"pressure", num(p), p_unit});
      rows.push_back({"verdict", verdict_for(est.P_physical)});
      print_rows(out, rows);
      for (const auto& w : est.warnings) out << "warning: " << w << '\n';
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- convexity

struct ConvexityArgs {
  std::string cutoff = "exp";
  double a = 0.0;
  std::optional<std::size_t> intervals;
};

int run_convexity(const ConvexityArgs& args, const Globals& g, std::ostream& out) {
  const CutoffSpec cutoff = CutoffSpec::parse(args.cutoff, args.a);
  const QuadratureOptions quad = g.lattice().quadrature;
  const Decomposition d = args.intervals ? interval_decomposition(cutoff, *args.intervals, quad)
                                         : interval_decomposition(cutoff, quad);
  const CurvatureBalance b = balance(d);

  switch (g.format()) {
    case Format::Json: {
      Json doc = header("convexity", g);
      doc["cutoff"] = cutoff.label();
      doc["a"] = args.a;
      Json rows = Json::array();
      for (const auto& r : d.intervals) {
        rows.push_back({{"n", r.n},
                        {"area_H", r.area_H},
                        {"area_G", r.area_G},
                        {"delta", r.delta},
                        {"class", to_string(r.curvature)}});
      }
      doc["intervals"] = rows;
      doc["tail"] = d.tail;
      doc["tail_bound"] = d.tail_bound;
      doc["total"] = d.total();
      doc["balance"] = {{"convex", b.convex}, {"concave", b.concave}, {"mixed", b.mixed}};
      write_json(out, doc);
      break;
    }
    case Format::Csv:
      out << "n,area_H,area_G,delta,class\n";
      for (const auto& r : d.intervals) {
        out << r.n << ',' << num(r.area_H) << ',' << num(r.area_G) << ',' << num(r.delta) << ','
            << to_string(r.curvature) << '\n';
      }
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> rows{{"n", "area_H", "area_G", "delta", "class"}};
      for (const auto& r : d.intervals) {
        rows.push_back({std::to_string(r.n), num(r.area_H), num(r.area_G), num(r.delta),
                        to_string(r.curvature)});
      }
      print_rows(out, rows);
      out << '\n';
      print_rows(out, {{"tail", num(d.tail)},
                       {"tail bound", num(d.tail_bound)},
                       {"total", num(d.total())},
                       {"convex share", num(b.convex)},
                       {"concave share", num(b.concave)},
                       {"mixed share", num(b.mixed)}});
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- stress

struct StressArgs {
  std::optional<double> C;
  std::string from_pressure;
};

double pressure_from_document(const std::string& path) {
  Json doc;
  try {
    if (path == "-") {
      doc = Json::parse(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw InputError("cannot open '" + path + "'");
      doc = Json::parse(in);
    }
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.contains("P_physical") || !doc["P_physical"].is_number()) {
    throw InputError("'" + path + "' has no numeric P_physical field");
  }
  return doc["P_physical"].get<double>();
}

int run_stress(const StressArgs& args, const Globals& g, std::ostream& out) {
  const StressTensorState state = args.C ? StressTensorState(*args.C)
                                         : link_to_pressure(pressure_from_document(args.from_pressure));
  const Tensor4 t = state.components();

  switch (g.format()) {
    case Format::Json: {
      Json doc = header("stress", g);
      doc["C"] = state.C();
      Json rows = Json::array();
      for (const auto& row : t) rows.push_back(row);
      doc["tensor"] = rows;
      doc["energy_density"] = state.energy_density();
      doc["plate_force"] = state.plate_force();
      doc["verdict"] = to_string(state.verdict());
      write_json(out, doc);
      break;
    }
    case Format::Csv:
      out << "mu,T0,T1,T2,T3\n";
      for (std::size_t mu = 0; mu < 4; ++mu) {
        out << mu;
        for (const double v : t[mu]) out << ',' << num(v);
        out << '\n';
      }
      break;
    case Format::Table: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& row : t) rows.push_back({num(row[0]), num(row[1]), num(row[2]), num(row[3])});
      out << "<T^{mu lambda}>\n";
      print_rows(out, rows);
      out << '\n';
      print_rows(out, {{"C", num(state.C())},
                       {"w = <T^00>", num(state.energy_density())},
                       {"F_z = <T^33>", num(state.plate_force())},
                       {"verdict", to_string(state.verdict())}});
      break;
    }
  }
  return kOk;
}

constexpr const char* kFooter =
    "Exit codes: 0 success, 2 usage error, 3 value out of range, 4 quadrature failure,\n"
    "            5 lattice remainder not certified, 6 density on a lattice threshold,\n"
    "            7 unreadable --from-pressure input";

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir pressure between parallel plates from regularized vacuum-mode sums",
               "casimir"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* json_flag = app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output")->excludes(json_flag);
  app.add_option("--tol", g.tol, "absolute tolerance for quadrature and lattice remainders")
      ->check(CLI::PositiveNumber);
  app.add_option("--units", g.units, "unit system for inputs and outputs")
      ->check(CLI::IsMember({"natural", "si"}));

  DensityArgs density;
  auto* density_cmd = app.add_subcommand("density", "mode spectral density ratio rho/rho0");
  density_cmd->add_option("--config", density.config, "plate pair")
      ->required()
      ->check(CLI::IsMember({"cc", "cp"}));
  density_cmd->add_option("--l", density.l, "plate separation")->capture_default_str();
  density_cmd->add_option("--omega-max", density.omega_max, "largest angular frequency")->required();
  density_cmd->add_option("--samples", density.samples, "number of equally spaced samples")
      ->capture_default_str();
  density_cmd->add_option("--theta0", density.theta0, "Heaviside value at a threshold")
      ->capture_default_str();

  PressureArgs press;
  auto* pressure_cmd = app.add_subcommand("pressure", "regularized Casimir pressure");
  pressure_cmd->add_option("--config", press.config, "plate pair")
      ->required()
      ->check(CLI::IsMember({"cc", "cp"}));
  pressure_cmd->add_option("--cutoff", press.cutoff, "exp | gauss | rat:<m>")->capture_default_str();
  pressure_cmd->add_option("--a-grid", press.a_grid,
                           "comma-separated regulator values (default 0.4,0.2,0.1,0.05,0.025)");
  pressure_cmd->add_option("--l", press.l, "plate separation")->capture_default_str();
  pressure_cmd->add_option("--oracle", press.oracle, "print an independent prediction")
      ->check(CLI::IsMember({"none", "em"}))
      ->capture_default_str();
  pressure_cmd->add_option("--em-order", press.em_order, "Euler-Maclaurin order K")
      ->check(CLI::Range(1, kMaxEulerMaclaurinOrder))
      ->capture_default_str();
  pressure_cmd->add_flag("--serial", press.serial, "evaluate the a-grid on one thread");

  ConvexityArgs conv;
  auto* convexity_cmd = app.add_subcommand("convexity", "per-interval H_a vs G_a area analysis");
  convexity_cmd->add_option("--cutoff", conv.cutoff, "exp | gauss | rat:<m>")->capture_default_str();
  convexity_cmd->add_option("--a", conv.a, "regulator parameter")->required();
  convexity_cmd->add_option("--n", conv.intervals,
                            "number of intervals (default: smallest with certified tail)");

  StressArgs stress;
  auto* stress_cmd = app.add_subcommand("stress", "planar vacuum stress tensor and plate force");
  auto* c_opt = stress_cmd->add_option("--C", stress.C, "tensor constant C");
  auto* from_opt = stress_cmd->add_option("--from-pressure", stress.from_pressure,
                                          "pressure JSON document ('-' for stdin)");
  c_opt->excludes(from_opt);
  stress_cmd->require_option(1);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("casimir");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (density_cmd->parsed()) return run_density(density, g, out, err);
    if (pressure_cmd->parsed()) return run_pressure(press, g, out);
    if (convexity_cmd->parsed()) return run_convexity(conv, g, out);
    if (stress_cmd->parsed()) return run_stress(stress, g, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << '\n';
    return kQuadrature;
  } catch (const TailBoundError& e) {
    err << "error: " << e.what() << '\n';
    return kTailBound;
  } catch (const ThresholdError& e) {
    err << "error: " << e.what() << '\n';
    return kThreshold;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}

}  // namespace casimir::cli
