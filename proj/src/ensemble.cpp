#include "izeta/ensemble.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "izeta/error.hpp"
#include "izeta/montecarlo.hpp"

namespace izeta {

SymMatrix build_H(const GraphSample& g, double rho, double v) {
  if (!(rho > 0.0)) throw std::invalid_argument("build_H: rho must be positive");
  SymMatrix h(static_cast<std::size_t>(g.n()));
  const double diag_scale = v * v / rho;
  const double off_scale = -v / std::sqrt(rho);
  for (int i = 0; i < g.n(); ++i) {
    h.set(static_cast<std::size_t>(i), static_cast<std::size_t>(i), diag_scale * g.degree(i));
  }
  for (const auto& e : g.edges()) {
    h.set(static_cast<std::size_t>(e.first), static_cast<std::size_t>(e.second), off_scale);
  }
  return h;
}

Eigen::SparseMatrix<double> build_H_sparse(const GraphSample& g, double rho, double v) {
  if (!(rho > 0.0)) throw std::invalid_argument("build_H_sparse: rho must be positive");
  const double diag_scale = v * v / rho;
  const double off_scale = -v / std::sqrt(rho);
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(g.n()) + 2 * g.edge_count());
  for (int i = 0; i < g.n(); ++i) entries.emplace_back(i, i, diag_scale * g.degree(i));
  for (const auto& e : g.edges()) {
    entries.emplace_back(e.first, e.second, off_scale);
    entries.emplace_back(e.second, e.first, off_scale);
  }
  Eigen::SparseMatrix<double> h(g.n(), g.n());
  h.setFromTriplets(entries.begin(), entries.end());
  return h;
}

std::complex<double> theta_term(const GraphSample& g, std::complex<double> u) {
  const std::complex<double> one_minus_u2 = 1.0 - u * u;
  if (std::abs(one_minus_u2) < 1e-14) throw DomainError("theta_term: u^2 = 1");
  const double euler = static_cast<double>(g.edge_count()) - g.n();
  return euler / g.n() * std::log(one_minus_u2);
}

SpectralMeasure::SpectralMeasure(std::vector<double> eigenvalues) : eigenvalues_(std::move(eigenvalues)) {
  if (!std::is_sorted(eigenvalues_.begin(), eigenvalues_.end())) {
    std::sort(eigenvalues_.begin(), eigenvalues_.end());
  }
}

double SpectralMeasure::cdf(double lambda) const {
  if (eigenvalues_.empty()) return 0.0;
  const auto it = std::upper_bound(eigenvalues_.begin(), eigenvalues_.end(), lambda);
  return static_cast<double>(it - eigenvalues_.begin()) / static_cast<double>(eigenvalues_.size());
}

double SpectralMeasure::moment(int k) const {
  return power_moments(eigenvalues_, k).back();
}

SpectralMeasure esd(const SymMatrix& h) {
  const auto dec = sym_eigen(h, false);
  return SpectralMeasure(std::vector<double>(dec.eigenvalues.data(), dec.eigenvalues.data() + dec.eigenvalues.size()));
}

SpectralMeasure average_measures(std::span<const SpectralMeasure> measures) {
  if (measures.empty()) return {};
  const std::size_t size = measures.front().size();
  std::vector<double> pooled;
  pooled.reserve(size * measures.size());
  for (const auto& m : measures) {
    if (m.size() != size) throw std::invalid_argument("average_measures: measures must share a dimension");
    pooled.insert(pooled.end(), m.eigenvalues().begin(), m.eigenvalues().end());
  }
  std::sort(pooled.begin(), pooled.end());
  return SpectralMeasure(std::move(pooled));
}

double ks_distance(const SpectralMeasure& measure, const LimitLaw& law) {
  const auto values = measure.eigenvalues();
  if (values.empty()) throw std::invalid_argument("ks_distance: empty measure");
  const double total = static_cast<double>(values.size());
  double worst = 0.0;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    const double below = static_cast<double>(i) / total;  // F_hat(x-)
    const double at = static_cast<double>(j) / total;     // F_hat(x)
    worst = std::max({worst, std::abs(below - law.cdf_left(values[i])), std::abs(at - law.cdf(values[i]))});
    i = j;
  }
  return worst;
}

std::vector<double> power_moments(std::span<const double> eigenvalues, int k_max) {
  if (k_max < 0) throw std::invalid_argument("power_moments: k_max must be >= 0");
  std::vector<double> sums(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (double lambda : eigenvalues) {
    double p = 1.0;
    for (int k = 1; k <= k_max; ++k) {
      p *= lambda;
      sums[static_cast<std::size_t>(k)] += p;
    }
  }
  const double n = static_cast<double>(eigenvalues.size());
  for (auto& s : sums) s /= n;
  sums[0] = 1.0;
  return sums;
}

std::vector<double> trace_moments(const GraphSample& g, double rho, double v, int k_max) {
  if (k_max < 0) throw std::invalid_argument("trace_moments: k_max must be >= 0");
  const Eigen::SparseMatrix<double> h = build_H_sparse(g, rho, v);
  const int top = (k_max + 1) / 2;
  std::vector<Eigen::SparseMatrix<double>> powers;  // powers[a - 1] = H^a
  powers.reserve(static_cast<std::size_t>(std::max(top, 1)));
  if (top >= 1) powers.push_back(h);
  for (int a = 2; a <= top; ++a) {
    Eigen::SparseMatrix<double> next = powers.back() * h;
    powers.push_back(std::move(next));
  }
  const double n = g.n();
  std::vector<double> out(static_cast<std::size_t>(k_max) + 1, 0.0);
  out[0] = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    const int a = (k + 1) / 2;
    const int b = k / 2;
    const auto& pa = powers[static_cast<std::size_t>(a - 1)];
    double trace = 0.0;
    if (b == 0) {
      for (Eigen::Index i = 0; i < pa.rows(); ++i) trace += pa.coeff(i, i);
    } else {
      trace = pa.cwiseProduct(powers[static_cast<std::size_t>(b - 1)]).sum();
    }
    out[static_cast<std::size_t>(k)] = trace / n;
  }
  return out;
}

MomentEstimate empirical_moments(const EnsembleParams& params, int k_max, const MomentOptions& options) {
  params.validate();
  if (k_max < 1) throw std::invalid_argument("empirical_moments: k_max must be >= 1");
  if (params.replicas < 2) throw std::invalid_argument("empirical_moments: at least 2 replicas are needed for stderr");

  auto per_replica = run_replicas(params.replicas, options.threads, [&](std::size_t r) {
    const GraphSample g = sample_er_graph(params, r);
    if (options.method == MomentMethod::kTraces) return trace_moments(g, params.rho, params.v, k_max);
    const auto measure = esd(build_H(g, params.rho, params.v));
    return power_moments(measure.eigenvalues(), k_max);
  });

  MomentEstimate est;
  est.k_max = k_max;
  est.replicas = params.replicas;
  est.values.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  est.standard_errors.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (int k = 0; k <= k_max; ++k) {
    RunningStats stats;
    for (const auto& m : per_replica) stats.push(m[static_cast<std::size_t>(k)]);
    est.values[static_cast<std::size_t>(k)] = stats.mean();
    est.standard_errors[static_cast<std::size_t>(k)] = stats.stderr_of_mean();
  }
  est.values[0] = 1.0;
  est.standard_errors[0] = 0.0;
  return est;
}

namespace {

struct OracleWalk {
  int n;
  int k;
  unsigned word;  // bit t set: letter t is A, else B
  std::vector<std::pair<int, int>> used;
  std::vector<long long> by_edges;  // assignments grouped by distinct-edge count

  void record() {
    auto edges = used;
    std::sort(edges.begin(), edges.end());
    const auto distinct = std::unique(edges.begin(), edges.end()) - edges.begin();
    if (by_edges.size() <= static_cast<std::size_t>(distinct)) by_edges.resize(static_cast<std::size_t>(distinct) + 1, 0);
    ++by_edges[static_cast<std::size_t>(distinct)];
  }

  void step(int t, int start, int current) {
    if (t == k) {
      if (current == start) record();
      return;
    }
    const bool is_a = (word >> t) & 1U;
    for (int j = 0; j < n; ++j) {
      if (j == current) continue;  // a_ii = 0
      used.emplace_back(std::min(current, j), std::max(current, j));
      // A moves the walk to j; B keeps it at `current` with j as the summed
      // neighbour of the degree factor.
      step(t + 1, start, is_a ? j : current);
      used.pop_back();
    }
  }
};

}  // namespace

double exact_moment_oracle(int n, double rho, double v, int k) {
  if (n < 2 || n > 6) throw std::invalid_argument("exact_moment_oracle: n must be in [2, 6]");
  if (k < 0 || k > 4) throw std::invalid_argument("exact_moment_oracle: k must be in [0, 4]");
  if (!(rho > 0.0) || !(rho < n)) throw std::invalid_argument("exact_moment_oracle: rho must satisfy 0 < rho < n");
  if (k == 0) return 1.0;

  const long double p = static_cast<long double>(rho) / n;
  long double total = 0.0L;
  for (unsigned word = 0; word < (1U << k); ++word) {
    const int a_letters = std::popcount(word);
    const int b_letters = k - a_letters;
    OracleWalk walk{n, k, word, {}, {}};
    for (int start = 0; start < n; ++start) walk.step(0, start, start);

    long double expectation = 0.0L;
    for (std::size_t e = 0; e < walk.by_edges.size(); ++e) {
      expectation += static_cast<long double>(walk.by_edges[e]) * std::pow(p, static_cast<long double>(e));
    }
    // Each B contributes v^2 / rho, each A contributes -v / sqrt(rho).
    long double coeff = std::pow(static_cast<long double>(v) * v / rho, b_letters) *
                        std::pow(-static_cast<long double>(v) / std::sqrt(static_cast<long double>(rho)), a_letters);
    total += coeff * expectation;
  }
  return static_cast<double>(total / n);
}

XiRecord xi_from_eigenvalues(std::span<const double> eigenvalues, double rho, double v) {
  if (!(rho > 0.0)) throw std::invalid_argument("xi_finite: rho must be positive");
  XiRecord rec;
  rec.one_rho = 1.0 - v * v / rho;
  double sum = 0.0;
  for (double lambda : eigenvalues) {
    const double shifted = rec.one_rho + lambda;
    if (std::abs(shifted) < 1e-13) throw SingularError("xi_finite: singular log-determinant");
    if (shifted < 0.0) ++rec.negative_count;
    sum += std::log(std::abs(shifted));
  }
  rec.xi = sum / static_cast<double>(eigenvalues.size());
  return rec;
}

XiRecord xi_finite(const GraphSample& g, double rho, double v) {
  const auto measure = esd(build_H(g, rho, v));
  return xi_from_eigenvalues(measure.eigenvalues(), rho, v);
}

double log_zeta_normalized(const GraphSample& g, double rho, double v, const XiRecord& xi) {
  if (!(v * v / rho < 1.0)) throw DomainError("log_zeta_normalized: requires v^2 / rho < 1");
  if (xi.negative_count > 0) {
    throw NegativeSpectrumError("log Z undefined on real branch: " + std::to_string(xi.negative_count) +
                                    " negative shifted eigenvalues",
                                xi.negative_count);
  }
  return -theta_term(g, v / std::sqrt(rho)).real() - xi.xi;
}

double log_zeta_normalized(const GraphSample& g, double rho, double v) {
  if (!(rho > 0.0)) throw std::invalid_argument("log_zeta_normalized: rho must be positive");
  if (!(v * v / rho < 1.0)) throw DomainError("log_zeta_normalized: requires v^2 / rho < 1");
  return log_zeta_normalized(g, rho, v, xi_finite(g, rho, v));
}

}  // namespace izeta
