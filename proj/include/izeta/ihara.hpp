#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "izeta/graph.hpp"
#include "izeta/linalg.hpp"

namespace izeta {

// The 2|E| orientations of a graph's edges. Undirected edge k yields directed
// edges 2k (first -> second) and 2k+1 (second -> first), so inv(e) = e ^ 1.
class DirectedEdgeIndex {
 public:
  explicit DirectedEdgeIndex(const GraphSample& g);

  std::size_t size() const noexcept { return tail_.size(); }
  int tail(std::size_t e) const { return tail_[e]; }
  int head(std::size_t e) const { return head_[e]; }
  static std::size_t inv(std::size_t e) noexcept { return e ^ 1U; }

  // Directed edges leaving vertex v.
  std::span<const std::size_t> outgoing(int v) const;

 private:
  std::vector<int> tail_;
  std::vector<int> head_;
  std::vector<std::size_t> out_offsets_;
  std::vector<std::size_t> out_edges_;
};

// (Tx)[f] = sum of x[e] over e with head(e) = tail(f) and e != inv(f).
std::vector<double> hashimoto_apply(const DirectedEdgeIndex& index, std::span<const double> x);
std::vector<double> hashimoto_apply(const GraphSample& g, std::span<const double> x);

// Largest edge-operator dimension that may be materialized densely.
inline constexpr std::size_t kMaxDenseEdgeOperator = 600;

// Dense edge operator with T(f, e) = 1 iff e feeds into f without backtracking.
Eigen::MatrixXd hashimoto_dense(const GraphSample& g);

using WalkCount = __int128;

std::string to_string(WalkCount value);

struct CycleCounts {
  // Index m holds the value for length m; index 0 is unused and zero.
  std::vector<WalkCount> closed_walks;  // N[m] = Tr T^m
  std::vector<WalkCount> primitive;     // P[m], number of primitive cycle classes
};

int mobius(int m);

// Exact counts of closed non-backtracking tail-less walks of length 1..max_length
// and their primitive-class counts by Mobius inversion.
CycleCounts nb_walk_counts(const GraphSample& g, int max_length);

// N[m] = sum over d | m of d * P[d]. Inverse of the Mobius step, for checks.
std::vector<WalkCount> closed_walks_from_primitive(std::span<const WalkCount> primitive);

// log of Z(u)^{-1} = (1 - u^2)^{|E| - n} det(I + u^2 (B - I) - u A).
// Throws DomainError at u = +-1 and SingularError at zeros of Z^{-1}.
LogDet ihara_rhs_eval(const GraphSample& g, std::complex<double> u);

struct SeriesCheck {
  double residual = 0.0;    // |sum_{m<=M} N[m] u^m / m + log Z^{-1}(u)|
  double tail_bound = 0.0;  // upper bound on sum_{m>M} N[m] |u|^m / m
};

// Compares the cycle series of log Z with the determinant side. Requires
// |u| <= 1 / (2 max_degree) and M >= 4.
SeriesCheck zeta_log_series_check(const GraphSample& g, std::complex<double> u, int max_length);

// Maximum relative discrepancy between det(I - uT) and the determinant side
// over the sample points. Requires a connected graph with |E| >= n.
double bass_identity_check(const GraphSample& g, std::span<const std::complex<double>> samples);

}  // namespace izeta
