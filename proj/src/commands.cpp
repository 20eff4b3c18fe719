#include "izeta/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "izeta/ensemble.hpp"
#include "izeta/error.hpp"
#include "izeta/graph_io.hpp"
#include "izeta/ihara.hpp"
#include "izeta/limits.hpp"
#include "izeta/montecarlo.hpp"

namespace izeta::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr double kZetaTolerance = 1e-8;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  if (c.command != "zeta-verify") {
    j["n"] = c.n;
    j["rho"] = c.rho;
    if (c.command == "xi") {
      j["v_grid"] = c.v_grid;
    } else {
      j["v"] = c.v;
    }
    j["seed"] = c.seed;
    j["replicas"] = c.replicas;
  }
  if (c.command == "moments") {
    j["k_max"] = c.k_max;
    j["method"] = c.method;
  }
  if (c.command == "esd") j["bins"] = c.bins;
  if (c.command == "xi") j["nodes"] = c.nodes;
  if (c.command == "zeta-verify") {
    j["graph"] = c.graph_file;
    j["builtin"] = c.builtin;
    j["rho"] = c.rho;
    j["order"] = c.order;
    j["seed"] = c.seed;
  }
  j["format"] = c.format;
  j["threads"] = c.threads;
  return j;
}

// Owns the --out file when one is given.
class Sink {
 public:
  Sink(const RunConfig& config, std::ostream& fallback) : stream_(&fallback) {
    if (!config.out.empty()) {
      file_.open(config.out, std::ios::out | std::ios::trunc);
      if (!file_) throw std::invalid_argument("cannot open output file: " + config.out);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit_json(const RunConfig& config, json results, std::chrono::steady_clock::time_point started, std::ostream& out) {
  json doc;
  doc["schema"] = kSchema;
  doc["config"] = config_json(config);
  doc["results"] = std::move(results);
  if (config.timing) {
    doc["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  }
  out << doc.dump(2) << '\n';
}

EnsembleParams params_of(const RunConfig& c, double v) {
  EnsembleParams p;
  p.n = c.n;
  p.rho = c.rho;
  p.v = v;
  p.master_seed = c.seed;
  p.replicas = c.replicas;
  return p;
}

}  // namespace

void RunConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
  if (format != "json" && format != "csv") fail("--format must be json or csv");
  if (command == "zeta-verify") {
    if (graph_file.empty() == builtin.empty()) fail("zeta-verify needs exactly one of --graph or --builtin");
    if (!(rho > 0.0)) fail("--rho must be positive");
    if (order < 4) fail("--order must be at least 4");
    return;
  }
  if (n < 2) fail("--n must be at least 2");
  if (!(rho > 0.0 && rho < n)) fail("--rho must satisfy 0 < rho < n");
  if (replicas < 1) fail("--replicas must be at least 1");
  if (command == "moments") {
    if (replicas < 2) fail("--replicas must be at least 2 for standard errors");
    if (k_max < 1) fail("--k-max must be at least 1");
    if (method != "eigen" && method != "trace") fail("--method must be eigen or trace");
  }
  if (command == "esd" && bins < 1) fail("--bins must be positive");
  if (command == "xi") {
    if (nodes < 8) fail("--nodes must be at least 8");
    if (v_grid.empty()) fail("--v-grid must not be empty");
    for (double v : v_grid) {
      if (!std::isfinite(v)) fail("--v-grid values must be finite");
    }
  }
}

int cmd_moments(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const auto started = std::chrono::steady_clock::now();
  MomentOptions options;
  options.threads = config.threads;
  options.method = config.method == "trace" ? MomentMethod::kTraces : MomentMethod::kEigenvalues;
  const auto est = empirical_moments(params_of(config, config.v), config.k_max, options);

  struct Row {
    int k;
    double mean, se, limit, gap, rho_gap, r1;
  };
  std::vector<Row> rows;
  for (int k = 0; k <= config.k_max; ++k) {
    const double limit = limit_moment_closed(k, config.v);
    const double mean = est.values[static_cast<std::size_t>(k)];
    rows.push_back({k, mean, est.standard_errors[static_cast<std::size_t>(k)], limit, mean - limit,
                    config.rho * (mean - limit), k >= 1 ? correction_R1(k, config.v) : 0.0});
  }

  Sink sink(config, out);
  if (config.format == "csv") {
    auto& o = sink.get();
    o << "k,empirical_mean,stderr,limit,gap,rho_gap,R1\n";
    for (const auto& r : rows) {
      o << r.k << ',' << num(r.mean) << ',' << num(r.se) << ',' << num(r.limit) << ',' << num(r.gap) << ','
        << num(r.rho_gap) << ',' << num(r.r1) << '\n';
    }
    return kSuccess;
  }
  json results;
  results["replicas"] = est.replicas;
  json table = json::array();
  for (const auto& r : rows) {
    table.push_back({{"k", r.k},
                     {"empirical_mean", r.mean},
                     {"stderr", r.se},
                     {"limit", r.limit},
                     {"gap", r.gap},
                     {"rho_gap", r.rho_gap},
                     {"R1", r.r1}});
  }
  results["moments"] = std::move(table);
  emit_json(config, std::move(results), started, sink.get());
  return kSuccess;
}

int cmd_esd(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  const auto params = params_of(config, config.v);
  params.validate();
  const LimitLaw law(config.v);

  const auto measures = run_replicas(config.replicas, config.threads, [&](std::size_t r) {
    return esd(build_H(sample_er_graph(params, r), config.rho, config.v));
  });
  const SpectralMeasure pooled = average_measures(measures);
  const double ks = ks_distance(pooled, law);
  std::vector<double> ks_each;
  ks_each.reserve(measures.size());
  for (const auto& m : measures) ks_each.push_back(ks_distance(m, law));

  // Histogram over the limiting support, widened by a quarter on each side.
  double lo = -1.0;
  double hi = 1.0;
  if (!law.degenerate()) {
    const double width = law.support_high() - law.support_low();
    lo = law.support_low() - 0.25 * width;
    hi = law.support_high() + 0.25 * width;
  }
  const double bin_width = (hi - lo) / config.bins;
  std::vector<std::size_t> counts(static_cast<std::size_t>(config.bins), 0);
  std::size_t below = 0;
  std::size_t above = 0;
  for (double x : pooled.eigenvalues()) {
    if (x < lo) {
      ++below;
    } else if (x >= hi) {
      ++above;
    } else {
      auto b = static_cast<std::size_t>((x - lo) / bin_width);
      ++counts[std::min(b, counts.size() - 1)];
    }
  }
  const double total = static_cast<double>(pooled.size());

  Sink sink(config, out);
  if (config.format == "csv") {
    auto& o = sink.get();
    o << "bin_left,bin_right,empirical_density,limit_density\n";
    for (int b = 0; b < config.bins; ++b) {
      const double left = lo + b * bin_width;
      const double right = left + bin_width;
      const double limit = (law.cdf(right) - law.cdf(left)) / bin_width;
      o << num(left) << ',' << num(right) << ',' << num(static_cast<double>(counts[static_cast<std::size_t>(b)]) / (total * bin_width))
        << ',' << num(limit) << '\n';
    }
    err << "ks=" << num(ks) << '\n';
    return kSuccess;
  }
  json hist = json::array();
  for (int b = 0; b < config.bins; ++b) {
    const double left = lo + b * bin_width;
    const double right = left + bin_width;
    hist.push_back({{"bin_left", left},
                    {"bin_right", right},
                    {"empirical_density", static_cast<double>(counts[static_cast<std::size_t>(b)]) / (total * bin_width)},
                    {"limit_density", (law.cdf(right) - law.cdf(left)) / bin_width}});
  }
  json results;
  results["ks"] = ks;
  results["ks_per_replica"] = ks_each;
  results["support"] = {law.support_low(), law.support_high()};
  results["below_range"] = below;
  results["above_range"] = above;
  results["histogram"] = std::move(hist);
  emit_json(config, std::move(results), started, sink.get());
  return kSuccess;
}

int cmd_zeta_verify(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const auto started = std::chrono::steady_clock::now();
  const GraphSample g = config.builtin.empty() ? read_graph_file(config.graph_file) : builtin_graph(config.builtin);
  const auto stats = degree_stats(g);

  struct Check {
    std::string name;
    double residual;
    double bound;
  };
  std::vector<Check> checks;
  std::vector<std::string> skipped;

  if (g.edge_count() == 0) {
    skipped.emplace_back("all: graph has no edges, Z = 1 identically");
  } else {
    if (g.is_connected() && static_cast<long>(g.edge_count()) >= g.n() &&
        2 * g.edge_count() <= kMaxDenseEdgeOperator) {
      auto engine = replica_stream(config.seed, 0);
      std::vector<std::complex<double>> samples;
      for (int i = 0; i < 20; ++i) {
        const double radius = 0.9 * std::sqrt(uniform01(engine));
        const double angle = 2.0 * std::numbers::pi * uniform01(engine);
        samples.push_back(std::polar(radius, angle));
      }
      checks.push_back({"bass_identity", bass_identity_check(g, samples), kZetaTolerance});
    } else {
      skipped.emplace_back("bass_identity: needs a connected graph with |E| >= n and 2|E| <= 600");
    }

    const double u_max = 1.0 / (2.0 * std::max(stats.max_degree, 1));
    const double u_series = std::min(0.1, u_max);
    for (const auto u : {std::complex<double>(u_series, 0.0), std::polar(u_series, 1.0)}) {
      const auto s = zeta_log_series_check(g, u, config.order);
      char label[64];
      std::snprintf(label, sizeof label, "cycle_series u=%.6g%+.6gi", u.real(), u.imag());
      checks.push_back({label,
                        s.residual, kZetaTolerance + s.tail_bound});
    }

    double worst = 0.0;
    for (double frac : {0.25, 0.5, 1.0}) {
      const double u = frac * u_max;
      const double v = u * std::sqrt(config.rho);
      const double assembled = log_zeta_normalized(g, config.rho, v);
      const double direct = -ihara_rhs_eval(g, u).log_modulus / g.n();
      worst = std::max(worst, std::abs(assembled - direct));
    }
    checks.push_back({"log_zeta_assembly", worst, kZetaTolerance});
  }

  if (g.girth() == 0) {
    // Forests: no cycles, so log Z vanishes identically.
    double worst = 0.0;
    for (double u : {0.1, 0.3, 0.6}) worst = std::max(worst, std::abs(log_zeta_normalized(g, 1.0, u)));
    checks.push_back({"forest_log_zeta_zero", worst, kZetaTolerance});
  }

  bool ok = true;
  double max_residual = 0.0;
  for (const auto& c : checks) {
    ok = ok && c.residual <= c.bound;
    max_residual = std::max(max_residual, c.residual);
  }

  Sink sink(config, out);
  if (config.format == "csv") {
    auto& o = sink.get();
    o << "check,residual,bound,passed\n";
    for (const auto& c : checks) {
      o << c.name << ',' << num(c.residual) << ',' << num(c.bound) << ',' << (c.residual <= c.bound ? 1 : 0) << '\n';
    }
  } else {
    json results;
    results["graph"] = {{"n", g.n()}, {"edges", g.edge_count()}, {"max_degree", stats.max_degree}, {"girth", g.girth()}};
    json list = json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name}, {"residual", c.residual}, {"bound", c.bound}, {"passed", c.residual <= c.bound}});
    }
    results["checks"] = std::move(list);
    results["skipped"] = skipped;
    results["max_residual"] = max_residual;
    results["passed"] = ok;
    emit_json(config, std::move(results), started, sink.get());
  }
  return ok ? kSuccess : kAcceptanceFailure;
}

int cmd_xi(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  const auto started = std::chrono::steady_clock::now();
  const auto params = params_of(config, 0.0);
  params.validate();

  struct Sample {
    double xi = 0.0;
    std::size_t negative = 0;
    std::optional<double> log_zeta;
  };
  const auto grid = config.v_grid;
  const auto per_replica = run_replicas(config.replicas, config.threads, [&](std::size_t r) {
    const GraphSample g = sample_er_graph(params, r);
    std::vector<Sample> row;
    row.reserve(grid.size());
    for (double v : grid) {
      Sample s;
      const XiRecord rec = xi_finite(g, config.rho, v);
      s.xi = rec.xi;
      s.negative = rec.negative_count;
      if (rec.negative_count == 0 && v * v < config.rho) s.log_zeta = log_zeta_normalized(g, config.rho, v, rec);
      row.push_back(s);
    }
    return row;
  });

  struct Row {
    double v;
    std::optional<double> limit;
    RunningStats xi, negative, log_zeta;
    std::size_t negative_replicas = 0;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Row row{grid[i], std::nullopt, {}, {}, {}, 0};
    if (std::abs(grid[i]) <= 1.0 - 1e-6) row.limit = xi_limit(grid[i], config.nodes).real();
    for (const auto& rep : per_replica) {
      const auto& s = rep[i];
      row.xi.push(s.xi);
      row.negative.push(static_cast<double>(s.negative));
      if (s.negative > 0) ++row.negative_replicas;
      if (s.log_zeta) row.log_zeta.push(*s.log_zeta);
    }
    rows.push_back(std::move(row));
  }

  Sink sink(config, out);
  if (config.format == "csv") {
    auto& o = sink.get();
    o << "v,xi_limit,rh_defect,xi_mean,xi_stderr,negative_replicas,negative_count_mean,log_zeta_mean,log_zeta_stderr,"
         "log_zeta_defined\n";
    for (const auto& r : rows) {
      o << num(r.v) << ',' << (r.limit ? num(*r.limit) : "") << ',' << (r.limit ? num(r.v * r.v / 2.0 - *r.limit) : "")
        << ',' << num(r.xi.mean()) << ',' << num(r.xi.stderr_of_mean()) << ',' << r.negative_replicas << ','
        << num(r.negative.mean()) << ',' << (r.log_zeta.count() ? num(r.log_zeta.mean()) : "") << ','
        << (r.log_zeta.count() ? num(r.log_zeta.stderr_of_mean()) : "") << ',' << r.log_zeta.count() << '\n';
    }
    return kSuccess;
  }
  json table = json::array();
  for (const auto& r : rows) {
    json j;
    j["v"] = r.v;
    j["xi_limit"] = r.limit ? json(*r.limit) : json(nullptr);
    j["rh_defect"] = r.limit ? json(r.v * r.v / 2.0 - *r.limit) : json(nullptr);
    j["xi_mean"] = r.xi.mean();
    j["xi_stderr"] = r.xi.stderr_of_mean();
    j["negative_replicas"] = r.negative_replicas;
    j["negative_count_mean"] = r.negative.mean();
    j["log_zeta_mean"] = r.log_zeta.count() ? json(r.log_zeta.mean()) : json(nullptr);
    j["log_zeta_stderr"] = r.log_zeta.count() ? json(r.log_zeta.stderr_of_mean()) : json(nullptr);
    j["log_zeta_defined"] = r.log_zeta.count();
    table.push_back(std::move(j));
  }
  json results;
  results["sweep"] = std::move(table);
  emit_json(config, std::move(results), started, sink.get());
  return kSuccess;
}

namespace {

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format: json or csv")->capture_default_str();
  sub->add_option("--out", c.out, "Write the report to this file instead of stdout");
  sub->add_option("--threads", c.threads, "Worker threads, 0 = all cores")->capture_default_str();
  sub->add_flag("--timing", c.timing, "Include wall time in JSON output");
}

void add_ensemble(CLI::App* sub, RunConfig& c, std::size_t default_replicas) {
  c.replicas = default_replicas;
  sub->add_option("--n", c.n, "Vertex count")->required();
  sub->add_option("--rho", c.rho, "Mean degree")->required();
  sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  sub->add_option("--replicas", c.replicas, "Number of sampled graphs")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral experiments on the Ihara zeta function of sparse random graphs", "izeta"};
  app.require_subcommand(1);

  RunConfig moments;
  moments.command = "moments";
  auto* sub_moments = app.add_subcommand("moments", "Replica-averaged moments of H against their limits");
  add_ensemble(sub_moments, moments, 100);
  sub_moments->add_option("--v", moments.v, "Spectral parameter")->required();
  sub_moments->add_option("--k-max", moments.k_max, "Highest moment")->capture_default_str();
  sub_moments->add_option("--method", moments.method, "eigen or trace")->capture_default_str();
  add_common(sub_moments, moments);

  RunConfig esd_cfg;
  esd_cfg.command = "esd";
  auto* sub_esd = app.add_subcommand("esd", "Averaged spectral distribution and KS distance to the limit law");
  add_ensemble(sub_esd, esd_cfg, 20);
  sub_esd->add_option("--v", esd_cfg.v, "Spectral parameter")->required();
  sub_esd->add_option("--bins", esd_cfg.bins, "Histogram bins")->capture_default_str();
  add_common(sub_esd, esd_cfg);

  RunConfig zeta;
  zeta.command = "zeta-verify";
  zeta.rho = 4.0;
  auto* sub_zeta = app.add_subcommand("zeta-verify", "Check the zeta identities on one small graph");
  auto* graph_opt = sub_zeta->add_option("--graph", zeta.graph_file, "Edge-list file");
  auto* builtin_opt = sub_zeta->add_option("--builtin", zeta.builtin, "c3, c5, k4, petersen or path2");
  graph_opt->excludes(builtin_opt);
  sub_zeta->add_option("--rho", zeta.rho, "Rescaling used for the log Z assembly check")->capture_default_str();
  sub_zeta->add_option("--order", zeta.order, "Cycle series truncation M")->capture_default_str();
  sub_zeta->add_option("--seed", zeta.seed, "Seed for the sample points")->capture_default_str();
  add_common(sub_zeta, zeta);

  RunConfig xi;
  xi.command = "xi";
  auto* sub_xi = app.add_subcommand("xi", "Finite-n log-determinant and log Z against the limiting integral");
  add_ensemble(sub_xi, xi, 20);
  auto* v_opt = sub_xi->add_option("--v", xi.v, "Single spectral parameter");
  sub_xi->add_option("--v-grid", xi.v_grid, "Comma-separated spectral parameters")->delimiter(',')->excludes(v_opt);
  sub_xi->add_option("--nodes", xi.nodes, "Quadrature nodes for the limit")->capture_default_str();
  add_common(sub_xi, xi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "izeta: " << e.what() << '\n';
    err << "Run with --help for usage.\n";
    return kUsageError;
  }

  try {
    if (sub_moments->parsed()) {
      moments.validate();
      return cmd_moments(moments, out, err);
    }
    if (sub_esd->parsed()) {
      esd_cfg.validate();
      return cmd_esd(esd_cfg, out, err);
    }
    if (sub_zeta->parsed()) {
      zeta.validate();
      return cmd_zeta_verify(zeta, out, err);
    }
    if (sub_xi->parsed()) {
      if (xi.v_grid.empty()) {
        if (v_opt->count() > 0) {
          xi.v_grid = {xi.v};
        } else {
          for (int i = 9; i >= 1; --i) xi.v_grid.push_back(-0.05 * i);
        }
      }
      xi.validate();
      return cmd_xi(xi, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "izeta: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "izeta: numerical failure: " << e.what() << '\n';
    return kAcceptanceFailure;
  }
  return kUsageError;
}

}  // namespace izeta::cli
