// contspec: verification suites, kernel/commutator/moment tables and
// parameter scans for the continuous-spectrum coherent-state families.
//
// Exit codes: 0 all checks passed, 1 verification failure, 2 usage or
// configuration error.

#include <atomic>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "contspec/axioms.hpp"
#include "contspec/conventions.hpp"
#include "contspec/dilation.hpp"
#include "contspec/ladder.hpp"
#include "contspec/table.hpp"
#include "contspec/translation.hpp"

namespace {

using contspec::Family;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Logging, gated by CONTSPEC_LOG in {off, error, warn, info, debug}.

enum class LogLevel { off = 0, error, warn, info, debug };

LogLevel log_level_from_env() {
  const char* env = std::getenv("CONTSPEC_LOG");
  if (!env) return LogLevel::warn;
  const std::string v = env;
  if (v == "off") return LogLevel::off;
  if (v == "error") return LogLevel::error;
  if (v == "warn") return LogLevel::warn;
  if (v == "info") return LogLevel::info;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::warn;
}

LogLevel g_log_level = LogLevel::warn;

void logmsg(LogLevel level, const char* fmt, ...) {
  if (level > g_log_level) return;
  static const char* names[] = {"off", "error", "warn", "info", "debug"};
  std::fprintf(stderr, "[contspec:%s] ", names[static_cast<int>(level)]);
  va_list args;
  va_start(args, fmt);
  std::vfprintf(stderr, fmt, args);
  va_end(args);
  std::fputc('\n', stderr);
}

// ---------------------------------------------------------------------------
// Options shared by every subcommand. Range-capable fields stay text and
// are parsed with parse_grid. A JSON config file fills any field the
// command line did not set.

struct CommonOpts {
  std::string family = "translation";
  std::string alpha = "1";
  std::string beta = "1";
  std::string lambda = "0.5";
  std::string epsilon = "0.5";
  std::string s;
  std::string gamma = "0";
  std::string omega = "1";
  std::string grid;
  double tol = 0.0;  // 0 keeps the per-check defaults
  std::string convention = "auto";
  std::string format;
  std::string out;
  int jobs = 1;
  std::string config_path;

  CLI::App* cmd = nullptr;

  Family family_enum() const {
    if (family == "translation") return Family::translation;
    if (family == "dilation") return Family::dilation;
    throw std::invalid_argument("family must be 'translation' or 'dilation'");
  }

  bool was_set(const std::string& flag) const {
    const CLI::Option* opt = cmd->get_option_no_throw(flag);
    return opt && opt->count() > 0;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, const std::string& default_format) {
  o.cmd = cmd;
  o.format = default_format;
  cmd->add_option("--family", o.family, "Coherent-state family")
      ->check(CLI::IsMember({"translation", "dilation"}));
  cmd->add_option("--alpha", o.alpha, "Translation shape parameter (value or lo:hi:n)");
  cmd->add_option("--beta", o.beta, "Dilation shape parameter (value or lo:hi:n)");
  cmd->add_option("--lambda", o.lambda, "Dilation lowering ratio, in (0,1)");
  cmd->add_option("--epsilon", o.epsilon, "Translation lowering step, > 0");
  cmd->add_option("--s", o.s, "Radial label (value or lo:hi:n)");
  cmd->add_option("--gamma", o.gamma, "Phase label");
  cmd->add_option("--omega", o.omega, "Energy scale, > 0");
  cmd->add_option("--grid", o.grid, "Probe grid lo:hi:count");
  cmd->add_option("--tol", o.tol, "Override moment/action thresholds");
  cmd->add_option("--convention", o.convention, "Disputed-sign handling")
      ->check(CLI::IsMember({"paper", "kernel", "auto"}));
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "Output path (default stdout)");
  cmd->add_option("--jobs", o.jobs, "Worker threads for grid scans")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--config", o.config_path, "JSON config file; flags override it");
}

void apply_config_file(CommonOpts& o) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw std::invalid_argument("cannot open config file: " + o.config_path);
  json j = json::parse(in);
  auto pull = [&](const std::string& key, auto& field) {
    if (!j.contains(key) || o.was_set("--" + key)) return;
    const json& v = j.at(key);
    using T = std::decay_t<decltype(field)>;
    if constexpr (std::is_same_v<T, std::string>) {
      field = v.is_string() ? v.get<std::string>() : v.dump();
    } else if constexpr (std::is_same_v<T, double>) {
      field = v.get<double>();
    } else {
      field = v.get<int>();
    }
  };
  pull("family", o.family);
  pull("alpha", o.alpha);
  pull("beta", o.beta);
  pull("lambda", o.lambda);
  pull("epsilon", o.epsilon);
  pull("s", o.s);
  pull("gamma", o.gamma);
  pull("omega", o.omega);
  pull("grid", o.grid);
  pull("tol", o.tol);
  pull("convention", o.convention);
  pull("format", o.format);
  pull("out", o.out);
  pull("jobs", o.jobs);
  logmsg(LogLevel::info, "config file %s applied", o.config_path.c_str());
}

double scalar(const std::string& text, const char* what) {
  auto grid = contspec::parse_grid(text);
  if (grid.size() != 1)
    throw std::invalid_argument(std::string(what) + " must be a single value here");
  return grid[0];
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text;
}

std::string table_output(const contspec::Table& table, const std::string& format) {
  if (format == "csv") return contspec::to_csv(table);
  json rows = json::array();
  for (const auto& r : table.rows) rows.push_back(r);
  return json{{"columns", table.columns}, {"rows", rows}}.dump(2) + "\n";
}

contspec::dilation::WeightConvention weight_convention(const std::string& mode) {
  using WC = contspec::dilation::WeightConvention;
  if (mode == "paper") return WC::paper;
  if (mode == "kernel") return WC::kernel_consistent;
  return contspec::adjudicate_conventions().weight();
}

contspec::dilation::MeasureConvention measure_convention(const std::string& mode) {
  using MC = contspec::dilation::MeasureConvention;
  if (mode == "paper") return MC::paper;
  if (mode == "kernel") return MC::moment_solution;
  return contspec::adjudicate_conventions().measure();
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(CommonOpts& o) {
  const Family family = o.family_enum();
  auto cfg = contspec::gk::SuiteConfig::defaults(family);
  const std::string shape_text = family == Family::translation ? o.alpha : o.beta;
  cfg.shape = scalar(shape_text, family == Family::translation ? "alpha" : "beta");
  if (!(cfg.shape > 0.0))
    throw std::invalid_argument(std::string(family == Family::translation ? "alpha" : "beta") +
                                " must be > 0");
  if (!o.s.empty()) cfg.s = scalar(o.s, "s");
  cfg.gamma = scalar(o.gamma, "gamma");
  cfg.omega = scalar(o.omega, "omega");
  cfg.epsilon = scalar(o.epsilon, "epsilon");
  cfg.lambda = scalar(o.lambda, "lambda");
  if (o.tol > 0.0) {
    cfg.thresholds.moment = o.tol;
    cfg.thresholds.action = o.tol;
  }
  if (o.convention == "paper")
    cfg.convention_mode = contspec::gk::ConventionMode::force_paper;
  else if (o.convention == "kernel")
    cfg.convention_mode = contspec::gk::ConventionMode::force_kernel;
  cfg.validate();

  logmsg(LogLevel::info, "running %s axiom suite, shape=%g",
         contspec::gk::family_name(family).c_str(), cfg.shape);
  auto report = contspec::gk::run_axiom_suite(cfg);
  write_output(contspec::gk::to_json(report).dump(2) + "\n", o.out);
  for (const auto& [axiom, ok] : report.axiom_pass)
    logmsg(ok ? LogLevel::info : LogLevel::error, "%s: %s", axiom.c_str(),
           ok ? "pass" : "FAIL");
  return report.pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// kernel

int cmd_kernel(CommonOpts& o) {
  const Family family = o.family_enum();
  const std::string grid_text = o.grid.empty() ? "0.01:20:200" : o.grid;
  const auto grid = contspec::parse_grid(grid_text);
  std::vector<contspec::SampleRow> rows;
  if (family == Family::translation) {
    contspec::translation::Params p{scalar(o.alpha, "alpha"),
                                    o.s.empty() ? 1.0 : scalar(o.s, "s"),
                                    scalar(o.gamma, "gamma"), scalar(o.epsilon, "epsilon"),
                                    scalar(o.omega, "omega")};
    rows = contspec::sample(contspec::translation::kernel(p), grid);
  } else {
    contspec::dilation::Params p{scalar(o.beta, "beta"),
                                 o.s.empty() ? 1.0 : scalar(o.s, "s"),
                                 scalar(o.gamma, "gamma"), scalar(o.lambda, "lambda"),
                                 scalar(o.omega, "omega")};
    rows = contspec::sample(contspec::dilation::kernel(p), grid);
  }
  contspec::Table table{{"E", "re", "im"}, {}};
  for (const auto& r : rows) table.rows.push_back({r.energy, r.re, r.im});
  write_output(table_output(table, o.format), o.out);
  return 0;
}

// ---------------------------------------------------------------------------
// commutator

int cmd_commutator(CommonOpts& o) {
  const Family family = o.family_enum();
  std::vector<double> grid;
  std::function<double(double)> d_paper, d_kernel, ratio;
  if (family == Family::translation) {
    const double alpha = scalar(o.alpha, "alpha");
    const double epsilon = scalar(o.epsilon, "epsilon");
    grid = contspec::parse_grid(o.grid.empty() ? "0:10:201" : o.grid);
    contspec::translation::Params p{alpha, 1.0, 0.0, epsilon, 1.0};
    d_paper = contspec::translation_commutator_paper(alpha, epsilon).d;
    d_kernel =
        contspec::q_commutator_multiplier(contspec::translation::annihilator(p), 1.0).d;
    ratio = contspec::commutator_limit_ratio(family, alpha, epsilon);
  } else {
    const double beta = scalar(o.beta, "beta");
    const double lambda = scalar(o.lambda, "lambda");
    grid = contspec::parse_grid(o.grid.empty() ? "0.1:10:201" : o.grid);
    contspec::dilation::Params p{beta, 1.0, 0.0, lambda, 1.0};
    d_paper = contspec::dilation_commutator_paper(beta, lambda).d;
    d_kernel = contspec::q_commutator_multiplier(
                   contspec::dilation::annihilator(p, weight_convention(o.convention)), 1.0)
                   .d;
    ratio = contspec::commutator_limit_ratio(family, beta, lambda);
  }
  contspec::Table table{{"E", "d_paper", "d_kernel", "ratio"}, {}};
  for (double e : grid) table.rows.push_back({e, d_paper(e), d_kernel(e), ratio(e)});
  write_output(table_output(table, o.format), o.out);
  return 0;
}

// ---------------------------------------------------------------------------
// moments

int cmd_moments(CommonOpts& o) {
  const Family family = o.family_enum();
  std::vector<double> probes;
  contspec::Table table{{"probe", "residual"}, {}};
  if (family == Family::translation) {
    const double alpha = scalar(o.alpha, "alpha");
    probes = o.grid.empty() ? std::vector<double>{0.0, 0.5, 1.0, 2.0, 5.0}
                            : contspec::parse_grid(o.grid);
    for (double e : probes)
      table.rows.push_back({e, contspec::translation::moment_residual(e, alpha)});
  } else {
    const double beta = scalar(o.beta, "beta");
    probes = o.grid.empty() ? std::vector<double>{-1.0, 0.0, 1.0, 2.0}
                            : contspec::parse_grid(o.grid);
    const auto mc = measure_convention(o.convention);
    for (double le : probes)
      table.rows.push_back({le, contspec::dilation::moment_residual(le, beta, mc)});
  }
  write_output(table_output(table, o.format), o.out);
  return 0;
}

// ---------------------------------------------------------------------------
// scan

struct ScanRow {
  std::vector<double> values;
  std::string error;
};

int cmd_scan(CommonOpts& o) {
  const Family family = o.family_enum();
  const auto shapes =
      contspec::parse_grid(family == Family::translation ? o.alpha : o.beta);
  const auto labels = contspec::parse_grid(o.s.empty() ? "0.5:2:3" : o.s);
  const double omega = scalar(o.omega, "omega");
  if (shapes.size() * labels.size() > 100000)
    throw std::invalid_argument("scan grid exceeds 1e5 points");

  struct Point {
    double shape, s;
  };
  std::vector<Point> points;
  for (double sh : shapes)
    for (double lbl : labels) points.push_back({sh, lbl});

  std::vector<ScanRow> rows(points.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (std::size_t i; (i = cursor.fetch_add(1)) < points.size();) {
      const auto [shape, s] = points[i];
      ScanRow row;
      try {
        double n2, action, mean;
        bool monotone = true;
        contspec::QuadratureSpec spec;
        if (family == Family::translation) {
          n2 = contspec::translation::normalization_sq(s, shape);
          action = contspec::translation::action_variable(s, shape);
          mean = omega * action;
          try {
            contspec::translation::certify_monotone(shape);
          } catch (const contspec::NotMonotone&) {
            monotone = false;
          }
          spec.transform = contspec::QuadTransform::gaussian_centering;
        } else {
          n2 = contspec::dilation::normalization_sq(s, shape);
          action = contspec::dilation::action_variable(s, shape);
          mean = omega * action;
          spec.transform = contspec::QuadTransform::log_substitution;
        }
        // Unit-normalization residual by quadrature of |K|^2.
        const contspec::EnergyKernel k =
            family == Family::translation
                ? contspec::translation::kernel({shape, s, 0.0, 1.0, omega})
                : contspec::dilation::kernel({shape, s, 0.0, 0.5, omega});
        const double nrm = contspec::norm(k, spec);
        row.values = {shape, s,    n2,
                      action, mean, std::fabs(nrm * nrm - 1.0),
                      monotone ? 1.0 : 0.0};
      } catch (const std::exception& ex) {
        const double nan = std::nan("");
        row.values = {shape, s, nan, nan, nan, nan, 0.0};
        row.error = ex.what();
      }
      rows[i] = std::move(row);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < o.jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  contspec::Table table{
      {"shape", "s", "norm_sq", "action_j", "mean_energy", "norm_residual", "monotone"},
      {}};
  json errors = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table.rows.push_back(rows[i].values);
    if (!rows[i].error.empty())
      errors.push_back({{"shape", points[i].shape}, {"s", points[i].s},
                        {"error", rows[i].error}});
  }
  if (o.format == "csv") {
    write_output(contspec::to_csv(table), o.out);
  } else {
    json rows_json = json::array();
    for (const auto& r : table.rows) rows_json.push_back(r);
    write_output(json{{"family", contspec::gk::family_name(family)},
                      {"columns", table.columns},
                      {"rows", rows_json},
                      {"errors", errors}}
                         .dump(2) +
                     "\n",
                 o.out);
  }
  return errors.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  g_log_level = log_level_from_env();

  CLI::App app{"Coherent-state verification toolkit for continuous energy spectra"};
  app.require_subcommand(1);

  CommonOpts verify_opts, kernel_opts, commutator_opts, moments_opts, scan_opts;
  add_common(app.add_subcommand("verify", "Run the axiom suite and write a JSON report"),
             verify_opts, "json");
  add_common(app.add_subcommand("kernel", "Tabulate a coherent kernel as (E, Re, Im)"),
             kernel_opts, "csv");
  add_common(app.add_subcommand(
                 "commutator", "Tabulate commutator multipliers and the limit ratio"),
             commutator_opts, "csv");
  add_common(app.add_subcommand("moments", "Tabulate resolution-of-identity residuals"),
             moments_opts, "csv");
  add_common(app.add_subcommand("scan", "Sweep a (shape, s) grid and aggregate"),
             scan_opts, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand("verify")) {
      apply_config_file(verify_opts);
      return cmd_verify(verify_opts);
    }
    if (app.got_subcommand("kernel")) {
      apply_config_file(kernel_opts);
      return cmd_kernel(kernel_opts);
    }
    if (app.got_subcommand("commutator")) {
      apply_config_file(commutator_opts);
      return cmd_commutator(commutator_opts);
    }
    if (app.got_subcommand("moments")) {
      apply_config_file(moments_opts);
      return cmd_moments(moments_opts);
    }
    if (app.got_subcommand("scan")) {
      apply_config_file(scan_opts);
      return cmd_scan(scan_opts);
    }
  } catch (const std::invalid_argument& ex) {
    logmsg(LogLevel::error, "invalid configuration: %s", ex.what());
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  } catch (const std::exception& ex) {
    logmsg(LogLevel::error, "verification error: %s", ex.what());
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 2;
}
