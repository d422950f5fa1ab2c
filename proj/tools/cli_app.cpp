#include "cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>

#include "cli_support.hpp"
#include "hahn/errors.hpp"
#include "hahn/legendre.hpp"

namespace hahn::cli {

namespace {

constexpr int kMaxN = 200;
constexpr double kBoundSlack = 1e-8;

const std::vector<std::string> kCommands{"weights", "eval",           "project", "decay",
                                         "runge",   "compare-legendre", "verify"};

struct Family {
  ParamSet set;
  HahnBasis basis;
  IntervalMap map;
};

std::vector<Family> families(const RunConfig& config) {
  std::vector<Family> out;
  for (const auto& s : config.param_sets)
    out.push_back({s, HahnBasis(HahnParams(s.alpha, s.beta, config.N)), IntervalMap(config.a, config.b, config.N)});
  return out;
}

CoefficientVector coefficients_for(const RunConfig& config, const Family& fam, const TestFunction& fn, int m) {
  const auto c = project(fn.on_grid(fam.basis, fam.map), m, fam.basis);
  return config.normalized ? c : to_unnormalized(c);
}

}  // namespace

int effective_degree(const RunConfig& config) {
  if (config.m) return *config.m;
  if (config.command == "runge") return config.N;
  return std::min(10, config.N);
}

void validate(const RunConfig& config) {
  if (std::find(kCommands.begin(), kCommands.end(), config.command) == kCommands.end())
    throw ConfigError("command: unknown command '" + config.command + "'");
  if (config.param_sets.empty()) throw ConfigError("params: at least one alpha,beta pair is required");
  for (const auto& p : config.param_sets) {
    if (!(p.alpha > -1.0) || !std::isfinite(p.alpha))
      throw ConfigError("alpha: must be > -1, got " + fmt(p.alpha));
    if (!(p.beta > -1.0) || !std::isfinite(p.beta))
      throw ConfigError("beta: must be > -1, got " + fmt(p.beta));
  }
  if (config.N < 1 || config.N > kMaxN)
    throw ConfigError("N: must lie in 1.." + std::to_string(kMaxN) + ", got " + std::to_string(config.N));
  const int m = effective_degree(config);
  if (m < 0 || m > config.N) throw ConfigError("m: must lie in 0..N, got " + std::to_string(m));
  if (config.command == "decay" && m < 1) throw ConfigError("m: decay needs m >= 1");
  for (int k : config.k)
    if (k < 0) throw ConfigError("k: smoothness orders must be nonnegative");
  if (config.k.empty()) throw ConfigError("k: at least one order is required");
  if (!(config.a < config.b) || !std::isfinite(config.a) || !std::isfinite(config.b))
    throw ConfigError("interval: needs finite a < b");
  if (config.samples < 2) throw ConfigError("samples: must be >= 2");
  const auto fn = TestFunction::parse(config.fn);
  if (fn.kind() == TestFunction::Kind::kMode && fn.mode_degree() > config.N)
    throw ConfigError("fn: mode degree exceeds N");
  if (!config.plot_script.empty() && config.out.empty())
    throw ConfigError("plot-script: needs --out so the script can reference the data file");
}

CommandResult cmd_weights(const RunConfig& config) {
  CsvWriter csv;
  write_metadata(csv, config);
  const auto fams = families(config);
  std::vector<std::string> head{"x", "t"};
  for (const auto& f : fams) head.push_back("omega_" + label(f.set));
  csv.header(head);
  for (int x = 0; x <= config.N; ++x) {
    std::vector<std::string> row{std::to_string(x), fmt(fams.front().map.to_physical(x))};
    for (const auto& f : fams) row.push_back(fmt(f.basis.weights().values[static_cast<std::size_t>(x)]));
    csv.row(row);
  }
  for (const auto& f : fams) csv.comment("total_" + label(f.set) + " = " + fmt(f.basis.weights().total));
  return {csv.str(), kSuccess};
}

CommandResult cmd_eval(const RunConfig& config) {
  CsvWriter csv;
  write_metadata(csv, config);
  const auto fams = families(config);
  const int m = effective_degree(config);
  std::vector<std::string> head{"n", "x", "t"};
  for (const auto& f : fams) {
    head.push_back("series_" + label(f.set));
    head.push_back("recurrence_" + label(f.set));
    head.push_back("normalized_" + label(f.set));
  }
  csv.header(head);
  for (int n = 0; n <= m; ++n) {
    for (int x = 0; x <= config.N; ++x) {
      std::vector<std::string> row{std::to_string(n), std::to_string(x), fmt(fams.front().map.to_physical(x))};
      for (const auto& f : fams) {
        row.push_back(fmt(hahn_eval_series(n, x, f.basis.params())));
        row.push_back(fmt(hahn_eval_recurrence(n, x, f.basis.params())));
        row.push_back(fmt(f.basis.on_grid(n)[static_cast<std::size_t>(x)]));
      }
      csv.row(row);
    }
  }
  return {csv.str(), kSuccess};
}

CommandResult cmd_project(const RunConfig& config) {
  CsvWriter csv;
  write_metadata(csv, config);
  const auto fams = families(config);
  const auto fn = TestFunction::parse(config.fn);
  const int m = effective_degree(config);

  std::vector<CoefficientVector> coeffs;
  for (const auto& f : fams) coeffs.push_back(coefficients_for(config, f, fn, m));

  std::vector<std::string> head{"n"};
  for (const auto& f : fams) {
    head.push_back("coeff_" + label(f.set));
    head.push_back("abs_" + label(f.set));
  }
  csv.header(head);
  for (int n = 0; n <= m; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& c : coeffs) {
      row.push_back(fmt(c.coeffs[static_cast<std::size_t>(n)]));
      row.push_back(fmt(std::abs(c.coeffs[static_cast<std::size_t>(n)])));
    }
    csv.row(row);
  }

  if (config.pointwise) {
    csv.blank();
    csv.comment("pointwise");
    std::vector<std::string> phead{"t", "u"};
    for (const auto& f : fams) {
      phead.push_back("approx_" + label(f.set));
      phead.push_back("error_" + label(f.set));
    }
    csv.header(phead);
    for (double t : sample_points(config.a, config.b, config.samples)) {
      std::vector<std::string> row{fmt(t)};
      bool first = true;
      for (std::size_t i = 0; i < fams.size(); ++i) {
        const double u = fn.at(t, fams[i].basis, fams[i].map);
        if (first) row.push_back(fmt(u));
        first = false;
        const double p = eval_expansion(coeffs[i], fams[i].map.to_grid(t), fams[i].basis);
        row.push_back(fmt(p));
        row.push_back(fmt(u - p));
      }
      csv.row(row);
    }
  }
  return {csv.str(), kSuccess};
}

CommandResult cmd_decay(const RunConfig& config) {
  CsvWriter csv;
  write_metadata(csv, config);
  const auto fams = families(config);
  const auto fn = TestFunction::parse(config.fn);
  const int m = effective_degree(config);
  std::vector<int> degrees(static_cast<std::size_t>(m));
  for (int n = 1; n <= m; ++n) degrees[static_cast<std::size_t>(n - 1)] = n;

  std::vector<std::string> head{"n", "k"};
  for (const auto& f : fams) {
    head.push_back("abs_" + label(f.set));
    head.push_back("bound_exact_" + label(f.set));
    head.push_back("bound_n2k_" + label(f.set));
  }
  csv.header(head);

  int violations = 0;
  double worst_identity = 0;
  for (int k : config.k) {
    std::vector<std::vector<DecayReport>> reports;
    for (const auto& f : fams) reports.push_back(decay_report(fn.on_grid(f.basis, f.map), f.basis.params(), k, degrees));
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      std::vector<std::string> row{std::to_string(degrees[i]), std::to_string(k)};
      for (const auto& r : reports) {
        const DecayReport& d = r[i];
        row.push_back(fmt(d.actual));
        row.push_back(fmt(d.bound_exact));
        row.push_back(fmt(d.bound_n2k));
        if (!d.bound_holds(kBoundSlack)) ++violations;
        worst_identity = std::max(worst_identity, d.identity_rel_error);
      }
      csv.row(row);
    }
  }
  csv.comment("bound_violations = " + std::to_string(violations));
  csv.comment("max_identity_rel_error = " + fmt(worst_identity));
  return {csv.str(), violations == 0 ? kSuccess : kInvariantViolation};
}

CommandResult cmd_runge(const RunConfig& config) {
  CsvWriter csv;
  write_metadata(csv, config);
  const auto fams = families(config);
  const auto fn = TestFunction::parse(config.fn);
  const int m = effective_degree(config);

  std::vector<CoefficientVector> coeffs;
  for (const auto& f : fams) coeffs.push_back(project(fn.on_grid(f.basis, f.map), m, f.basis));

  // grid nodes and dense samples, merged in ascending t
  std::map<double, bool> points;
  for (double t : sample_points(config.a, config.b, config.samples)) points.emplace(t, false);
  for (int x = 0; x <= config.N; ++x) points[fams.front().map.to_physical(x)] = true;

  std::vector<std::string> head{"t", "on_grid", "g"};
  for (const auto& f : fams) {
    head.push_back("approx_" + label(f.set));
    head.push_back("error_" + label(f.set));
  }
  csv.header(head);

  std::vector<double> worst(fams.size(), 0.0), worst_t(fams.size(), 0.0), worst_grid(fams.size(), 0.0);
  double gmax = 0;
  for (const auto& [t, on_grid] : points) {
    const double g = fn.at(t, fams.front().basis, fams.front().map);
    gmax = std::max(gmax, std::abs(g));
    std::vector<std::string> row{fmt(t), on_grid ? "1" : "0", fmt(g)};
    for (std::size_t i = 0; i < fams.size(); ++i) {
      const double p = eval_expansion(coeffs[i], fams[i].map.to_grid(t), fams[i].basis);
      const double err = std::abs(p - fn.at(t, fams[i].basis, fams[i].map));
      row.push_back(fmt(p));
      row.push_back(fmt(p - fn.at(t, fams[i].basis, fams[i].map)));
      if (on_grid) {
        worst_grid[i] = std::max(worst_grid[i], err);
      } else if (err > worst[i]) {
        worst[i] = err;
        worst_t[i] = t;
      }
    }
    csv.row(row);
  }
  for (std::size_t i = 0; i < fams.size(); ++i) {
    csv.comment("max_offgrid_error_" + label(fams[i].set) + " = " + fmt(worst[i]) + " at t = " + fmt(worst_t[i]));
    csv.comment("max_grid_error_" + label(fams[i].set) + " = " + fmt(worst_grid[i]));
  }
  csv.comment("max_abs_g = " + fmt(gmax));
  return {csv.str(), kSuccess};
}

CommandResult cmd_compare_legendre(const RunConfig& config) {
  CsvWriter csv;
  write_metadata(csv, config);
  const auto fams = families(config);
  const auto fn = TestFunction::parse(config.fn);
  const int m = effective_degree(config);
  if (config.a != -1.0 || config.b != 1.0) throw ConfigError("interval: the Legendre comparison lives on -1,1");

  const auto leg = legendre::coefficients([&](double t) { return fn.at(t, fams.front().basis, fams.front().map); }, m);
  std::vector<CoefficientVector> coeffs;
  std::vector<CoefficientVector> raw;
  for (const auto& f : fams) {
    coeffs.push_back(coefficients_for(config, f, fn, m));
    raw.push_back(to_unnormalized(project(fn.on_grid(f.basis, f.map), m, f.basis)));
  }

  std::vector<std::string> head{"n", "legendre", "abs_legendre"};
  for (const auto& f : fams) {
    head.push_back("hahn_" + label(f.set));
    head.push_back("abs_hahn_" + label(f.set));
  }
  csv.header(head);
  for (int n = 0; n <= m; ++n) {
    const auto nn = static_cast<std::size_t>(n);
    std::vector<std::string> row{std::to_string(n), fmt(leg[nn]), fmt(std::abs(leg[nn]))};
    for (const auto& c : coeffs) {
      row.push_back(fmt(c.coeffs[nn]));
      row.push_back(fmt(std::abs(c.coeffs[nn])));
    }
    csv.row(row);
  }
  // soft check, always in the Q_n basis (Q_n(0) = 1 like P_n(-1) = +-1)
  for (std::size_t i = 0; i < fams.size(); ++i) {
    bool below = true;
    for (int n = 5; n <= m; n += 2)
      below = below && std::abs(raw[i].coeffs[static_cast<std::size_t>(n)]) <= std::abs(leg[static_cast<std::size_t>(n)]);
    csv.comment("hahn_below_legendre_odd_n>=5_" + label(fams[i].set) + " = " + (below ? "yes" : "WARN no"));
  }
  return {csv.str(), kSuccess};
}

CommandResult run(const RunConfig& config) {
  validate(config);
  try {
    if (config.command == "weights") return cmd_weights(config);
    if (config.command == "eval") return cmd_eval(config);
    if (config.command == "project") return cmd_project(config);
    if (config.command == "decay") return cmd_decay(config);
    if (config.command == "runge") return cmd_runge(config);
    if (config.command == "compare-legendre") return cmd_compare_legendre(config);
    return cmd_verify(config);
  } catch (const hahn::Error& e) {
    return {std::string("error: ") + e.what() + "\n", kDomainError};
  }
}

namespace {

std::string plot_script_text(const RunConfig& config) {
  std::string s;
  s += "# gnuplot script generated by hahn-cli " + std::string(kVersion) + "\n";
  s += "set datafile separator ','\nset datafile commentschars '#'\nset key autotitle columnhead\n";
  if (config.command == "project" || config.command == "decay" || config.command == "compare-legendre")
    s += "set logscale y\n";
  s += "plot for [col=2:*] '" + config.out + "' using 1:col with linespoints\n";
  return s;
}

}  // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hahn polynomial expansions: weights, projections, coefficient bounds, Runge experiments"};
  RunConfig config;
  double alpha = 0.0;
  double beta = 0.0;
  int m = -1;
  std::string params_text;
  std::string interval_text = "-1,1";
  std::string normalized_text = "true";

  app.add_option("command", config.command, "weights | eval | project | decay | runge | compare-legendre | verify")
      ->required();
  app.add_option("--alpha", alpha, "Hahn alpha (> -1)");
  app.add_option("--beta", beta, "Hahn beta (> -1)");
  app.add_option("--N", config.N, "grid has N+1 points");
  app.add_option("--m", m, "truncation degree");
  app.add_option("--k", config.k, "smoothness orders for decay, e.g. 1,2,3")->delimiter(',');
  app.add_option("--fn", config.fn, "sin-pi | runge | poly:<c0,c1,...> | mode:<n>");
  app.add_option("--interval", interval_text, "physical interval a,b");
  app.add_option("--samples", config.samples, "off-grid sample count");
  app.add_option("--params", params_text, "parameter sets a,b[;a,b...]; overrides --alpha/--beta");
  app.add_option("--normalized", normalized_text, "true: unit-norm basis; false: Q_n(0) = 1 basis");
  app.add_option("--out", config.out, "output CSV path (default stdout)");
  app.add_option("--plot-script", config.plot_script, "also write a gnuplot script for --out");
  app.add_flag("--pointwise", config.pointwise, "project: append pointwise error table");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    config.param_sets = params_text.empty() ? std::vector<ParamSet>{{alpha, beta}} : parse_param_sets(params_text);
    std::tie(config.a, config.b) = parse_interval(interval_text);
    if (normalized_text == "true")
      config.normalized = true;
    else if (normalized_text == "false")
      config.normalized = false;
    else
      throw ConfigError("normalized: expected true or false");
    if (m >= 0 || app.count("--m") > 0) config.m = m;
    validate(config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  const CommandResult result = run(config);
  if (result.exit_code == kDomainError) {
    err << result.text;
    return result.exit_code;
  }
  if (config.out.empty()) {
    out << result.text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    file << result.text;
    if (!file) {
      err << "error: cannot write " << config.out << "\n";
      return kConfigError;
    }
    if (!config.plot_script.empty()) {
      std::ofstream script(config.plot_script, std::ios::binary);
      script << plot_script_text(config);
    }
  }
  if (result.exit_code == kInvariantViolation) err << "invariant violation, see output\n";
  return result.exit_code;
}

}  // namespace hahn::cli
