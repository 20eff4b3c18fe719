#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace izeta {

// Unordered edge stored with first < second.
struct Edge {
  int first = 0;
  int second = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph: sorted edge list plus degree vector.
// Construction normalizes edge orientation and rejects loops, duplicates and
// out-of-range endpoints.
class GraphSample {
 public:
  GraphSample(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const int> degrees() const noexcept { return degrees_; }
  int degree(int vertex) const { return degrees_.at(static_cast<std::size_t>(vertex)); }

  // Neighbour lists, ascending.
  std::vector<std::vector<int>> adjacency_lists() const;

  bool is_connected() const;

  // Length of the shortest cycle, or 0 for forests.
  int girth() const;

  friend bool operator==(const GraphSample&, const GraphSample&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
};

struct EnsembleParams {
  int n = 0;
  double rho = 0.0;
  double v = 0.0;
  std::uint64_t master_seed = 0;
  std::size_t replicas = 1;

  // Throws std::invalid_argument unless n >= 2, 0 < rho < n and replicas >= 1.
  void validate() const;
  double edge_probability() const { return rho / n; }
};

// Per-replica generator. The stream depends only on (master_seed, replica),
// never on scheduling, so replicas can run in any order on any worker.
std::mt19937_64 replica_stream(std::uint64_t master_seed, std::uint64_t replica);

// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
double uniform01(std::mt19937_64& engine);

// G(n, rho/n): each of the n(n-1)/2 pairs (i < j, visited in lexicographic
// order) is kept when its uniform draw falls below rho/n.
GraphSample sample_er_graph(const EnsembleParams& params, std::size_t replica_index);

struct DegreeStats {
  double mean_degree = 0.0;
  int max_degree = 0;
};

DegreeStats degree_stats(const GraphSample& g);

// Small named graphs used as zeta test cases.
namespace builtin {
GraphSample cycle(int n);
GraphSample complete(int n);
GraphSample path(int n);
GraphSample star(int leaves);
GraphSample petersen();
}  // namespace builtin

}  // namespace izeta
