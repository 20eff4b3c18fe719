#include "izeta/ihara.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "izeta/error.hpp"

namespace izeta {

DirectedEdgeIndex::DirectedEdgeIndex(const GraphSample& g) {
  const auto edges = g.edges();
  tail_.resize(2 * edges.size());
  head_.resize(2 * edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    tail_[2 * k] = edges[k].first;
    head_[2 * k] = edges[k].second;
    tail_[2 * k + 1] = edges[k].second;
    head_[2 * k + 1] = edges[k].first;
  }
  const auto n = static_cast<std::size_t>(g.n());
  out_offsets_.assign(n + 1, 0);
  for (int t : tail_) ++out_offsets_[static_cast<std::size_t>(t) + 1];
  for (std::size_t v = 0; v < n; ++v) out_offsets_[v + 1] += out_offsets_[v];
  out_edges_.resize(tail_.size());
  std::vector<std::size_t> fill(out_offsets_.begin(), out_offsets_.end() - 1);
  for (std::size_t e = 0; e < tail_.size(); ++e) {
    out_edges_[fill[static_cast<std::size_t>(tail_[e])]++] = e;
  }
}

std::span<const std::size_t> DirectedEdgeIndex::outgoing(int v) const {
  const auto vi = static_cast<std::size_t>(v);
  return std::span<const std::size_t>(out_edges_).subspan(out_offsets_[vi], out_offsets_[vi + 1] - out_offsets_[vi]);
}

namespace {

// y = T x for any ring type. Push form: each e forwards x[e] to every f
// leaving head(e) except its reversal.
template <class T>
void apply_edge_operator(const DirectedEdgeIndex& index, std::span<const T> x, std::span<T> y) {
  std::fill(y.begin(), y.end(), T{0});
  for (std::size_t e = 0; e < index.size(); ++e) {
    if (x[e] == T{0}) continue;
    const std::size_t back = DirectedEdgeIndex::inv(e);
    for (std::size_t f : index.outgoing(index.head(e))) {
      if (f != back) y[f] += x[e];
    }
  }
}

bool add_overflows(WalkCount a, WalkCount b, WalkCount* out) { return __builtin_add_overflow(a, b, out); }

// Tr T^m for m = 1..max_length in floating point; used for tail estimates only.
std::vector<double> walk_traces_double(const DirectedEdgeIndex& index, int max_length) {
  std::vector<double> traces(static_cast<std::size_t>(max_length) + 1, 0.0);
  std::vector<double> x(index.size());
  std::vector<double> y(index.size());
  for (std::size_t start = 0; start < index.size(); ++start) {
    std::fill(x.begin(), x.end(), 0.0);
    x[start] = 1.0;
    for (int m = 1; m <= max_length; ++m) {
      apply_edge_operator<double>(index, x, y);
      std::swap(x, y);
      traces[static_cast<std::size_t>(m)] += x[start];
    }
  }
  return traces;
}

}  // namespace

std::vector<double> hashimoto_apply(const DirectedEdgeIndex& index, std::span<const double> x) {
  if (x.size() != index.size()) throw std::invalid_argument("hashimoto_apply: vector length must be 2|E|");
  std::vector<double> y(index.size());
  apply_edge_operator<double>(index, x, y);
  return y;
}

std::vector<double> hashimoto_apply(const GraphSample& g, std::span<const double> x) {
  if (g.edge_count() == 0) throw std::invalid_argument("hashimoto_apply: graph has no edges");
  return hashimoto_apply(DirectedEdgeIndex(g), x);
}

Eigen::MatrixXd hashimoto_dense(const GraphSample& g) {
  const DirectedEdgeIndex index(g);
  if (index.size() > kMaxDenseEdgeOperator) {
    throw std::invalid_argument("hashimoto_dense: 2|E| = " + std::to_string(index.size()) +
                                " exceeds dense cap " + std::to_string(kMaxDenseEdgeOperator));
  }
  const auto dim = static_cast<Eigen::Index>(index.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t e = 0; e < index.size(); ++e) {
    for (std::size_t f : index.outgoing(index.head(e))) {
      if (f != DirectedEdgeIndex::inv(e)) t(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(e)) = 1.0;
    }
  }
  return t;
}

std::string to_string(WalkCount value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value) : static_cast<unsigned __int128>(value);
  std::string digits;
  while (mag > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

int mobius(int m) {
  if (m < 1) throw std::invalid_argument("mobius: argument must be positive");
  int result = 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return 0;
      result = -result;
    }
  }
  if (m > 1) result = -result;
  return result;
}

CycleCounts nb_walk_counts(const GraphSample& g, int max_length) {
  if (max_length < 1) throw std::invalid_argument("nb_walk_counts: max_length must be >= 1");
  const auto len = static_cast<std::size_t>(max_length);
  CycleCounts counts;
  counts.closed_walks.assign(len + 1, 0);
  counts.primitive.assign(len + 1, 0);
  if (g.edge_count() == 0) return counts;

  const DirectedEdgeIndex index(g);
  std::vector<WalkCount> x(index.size());
  std::vector<WalkCount> y(index.size());
  for (std::size_t start = 0; start < index.size(); ++start) {
    std::fill(x.begin(), x.end(), 0);
    x[start] = 1;
    for (int m = 1; m <= max_length; ++m) {
      std::fill(y.begin(), y.end(), 0);
      for (std::size_t e = 0; e < index.size(); ++e) {
        if (x[e] == 0) continue;
        for (std::size_t f : index.outgoing(index.head(e))) {
          if (f == DirectedEdgeIndex::inv(e)) continue;
          if (add_overflows(y[f], x[e], &y[f])) {
            throw OverflowError("nb_walk_counts: 128-bit overflow at length " + std::to_string(m), m);
          }
        }
      }
      std::swap(x, y);
      auto& slot = counts.closed_walks[static_cast<std::size_t>(m)];
      if (add_overflows(slot, x[start], &slot)) {
        throw OverflowError("nb_walk_counts: 128-bit overflow at length " + std::to_string(m), m);
      }
    }
  }

  for (int m = 1; m <= max_length; ++m) {
    WalkCount acc = 0;
    for (int d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      int mu = mobius(m / d);
      if (mu != 0) acc += mu * counts.closed_walks[static_cast<std::size_t>(d)];
    }
    if (acc < 0 || acc % m != 0) {
      throw std::logic_error("nb_walk_counts: Mobius inversion not integral at length " + std::to_string(m));
    }
    counts.primitive[static_cast<std::size_t>(m)] = acc / m;
  }
  return counts;
}

std::vector<WalkCount> closed_walks_from_primitive(std::span<const WalkCount> primitive) {
  std::vector<WalkCount> n(primitive.size(), 0);
  for (std::size_t m = 1; m < primitive.size(); ++m)
    for (std::size_t d = 1; d <= m; ++d)
      if (m % d == 0) n[m] += static_cast<WalkCount>(d) * primitive[d];
  return n;
}

LogDet ihara_rhs_eval(const GraphSample& g, std::complex<double> u) {
  if (g.edge_count() == 0) throw std::invalid_argument("ihara_rhs_eval: graph has no edges");
  const std::complex<double> one_minus_u2 = 1.0 - u * u;
  if (std::abs(one_minus_u2) < 1e-14) throw DomainError("ihara_rhs_eval: u^2 = 1");

  const auto n = static_cast<Eigen::Index>(g.n());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = 1.0 + u * u * (static_cast<double>(g.degree(static_cast<int>(i))) - 1.0);
  }
  for (const auto& e : g.edges()) {
    m(e.first, e.second) -= u;
    m(e.second, e.first) -= u;
  }

  LogDet det;
  try {
    det = complex_logdet(m);
  } catch (const SingularError&) {
    throw SingularError("zeta pole/zero at u = (" + std::to_string(u.real()) + ", " + std::to_string(u.imag()) + ")");
  }
  const double euler = static_cast<double>(g.edge_count()) - g.n();  // r - 1
  const std::complex<double> log_factor = std::log(one_minus_u2);
  return {det.log_modulus + euler * log_factor.real(), wrap_angle(det.argument + euler * log_factor.imag())};
}

SeriesCheck zeta_log_series_check(const GraphSample& g, std::complex<double> u, int max_length) {
  if (max_length < 4) throw std::invalid_argument("zeta_log_series_check: M must be >= 4");
  const auto stats = degree_stats(g);
  const double radius = std::abs(u);
  if (stats.max_degree > 0 && radius * 2.0 * stats.max_degree > 1.0 + 1e-12) {
    throw std::invalid_argument("zeta_log_series_check: |u| must not exceed 1/(2 max_degree)");
  }

  SeriesCheck out;
  if (g.edge_count() == 0) return out;

  const auto counts = nb_walk_counts(g, max_length);
  std::complex<double> series = 0.0;
  std::complex<double> power = 1.0;
  for (int m = 1; m <= max_length; ++m) {
    power *= u;
    series += static_cast<double>(counts.closed_walks[static_cast<std::size_t>(m)]) * power / static_cast<double>(m);
  }
  const LogDet rhs = ihara_rhs_eval(g, u);
  out.residual = std::abs(series + std::complex<double>(rhs.log_modulus, rhs.argument));

  // Sum the tail exactly for a stretch, then bound the remainder with
  // N[m] <= 2|E| (max_degree - 1)^m.
  const int horizon = max_length + 40;
  const DirectedEdgeIndex index(g);
  const auto traces = walk_traces_double(index, horizon);
  double tail = 0.0;
  for (int m = max_length + 1; m <= horizon; ++m) {
    tail += traces[static_cast<std::size_t>(m)] * std::pow(radius, m) / m;
  }
  const double q = (stats.max_degree - 1) * radius;
  if (q > 0.0) {
    tail += static_cast<double>(index.size()) * std::pow(q, horizon + 1) / ((horizon + 1) * (1.0 - q));
  }
  out.tail_bound = tail;
  return out;
}

double bass_identity_check(const GraphSample& g, std::span<const std::complex<double>> samples) {
  if (!g.is_connected()) throw std::invalid_argument("bass_identity_check: graph must be connected");
  if (static_cast<long>(g.edge_count()) < g.n()) {
    throw std::invalid_argument("bass_identity_check: requires |E| >= n");
  }
  const Eigen::MatrixXd t = hashimoto_dense(g);
  const auto dim = t.rows();
  double worst = 0.0;
  for (const auto& u : samples) {
    ComplexMatrix lhs = ComplexMatrix::Identity(dim, dim) - u * t.cast<std::complex<double>>();
    const LogDet a = complex_logdet(lhs);
    const LogDet b = ihara_rhs_eval(g, u);
    const std::complex<double> log_ratio(b.log_modulus - a.log_modulus, wrap_angle(b.argument - a.argument));
    worst = std::max(worst, std::abs(std::exp(log_ratio) - 1.0));
  }
  return worst;
}

}  // namespace izeta
