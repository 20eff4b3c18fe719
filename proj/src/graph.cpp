#include "izeta/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace izeta {

GraphSample::GraphSample(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), degrees_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n) {
      throw std::invalid_argument("edge {" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + "} out of range for n=" +
                                  std::to_string(n));
    }
    if (e.first == e.second) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.first));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + "}");
  }
  for (const auto& e : edges_) {
    ++degrees_[static_cast<std::size_t>(e.first)];
    ++degrees_[static_cast<std::size_t>(e.second)];
  }
}

std::vector<std::vector<int>> GraphSample::adjacency_lists() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < adj.size(); ++i) adj[i].reserve(static_cast<std::size_t>(degrees_[i]));
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e.first)].push_back(e.second);
    adj[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool GraphSample::is_connected() const {
  const auto adj = adjacency_lists();
  std::vector<char> seen(adj.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == adj.size();
}

int GraphSample::girth() const {
  // BFS from every vertex; a non-tree edge closing at depths (a, b) witnesses
  // a cycle of length a + b + 1, and the minimum over all roots is exact.
  const auto adj = adjacency_lists();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(adj.size());
  std::vector<int> parent(adj.size());
  for (int root = 0; root < n_; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[static_cast<std::size_t>(u)]) {
        auto wi = static_cast<std::size_t>(w);
        if (dist[wi] < 0) {
          dist[wi] = dist[static_cast<std::size_t>(u)] + 1;
          parent[wi] = u;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(u)] != w) {
          best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[wi] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

void EnsembleParams::validate() const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (!(rho > 0.0) || !(rho < n)) {
    throw std::invalid_argument("rho must satisfy 0 < rho < n");
  }
  if (replicas < 1) throw std::invalid_argument("replicas must be at least 1");
}

std::mt19937_64 replica_stream(std::uint64_t master_seed, std::uint64_t replica) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(replica),
                    static_cast<std::uint32_t>(replica >> 32)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

GraphSample sample_er_graph(const EnsembleParams& params, std::size_t replica_index) {
  params.validate();
  if (replica_index >= params.replicas) {
    throw std::invalid_argument("replica index " + std::to_string(replica_index) +
                                " out of range (replicas=" + std::to_string(params.replicas) + ")");
  }
  auto engine = replica_stream(params.master_seed, replica_index);
  const double p = params.edge_probability();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(params.rho * params.n / 2.0 * 1.2) + 16);
  for (int i = 0; i < params.n; ++i) {
    for (int j = i + 1; j < params.n; ++j) {
      if (uniform01(engine) < p) edges.push_back({i, j});
    }
  }
  return GraphSample(params.n, std::move(edges));
}

DegreeStats degree_stats(const GraphSample& g) {
  DegreeStats s;
  s.mean_degree = 2.0 * static_cast<double>(g.edge_count()) / g.n();
  for (int d : g.degrees()) s.max_degree = std::max(s.max_degree, d);
  return s;
}

namespace builtin {

GraphSample cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return GraphSample(n, std::move(edges));
}

GraphSample complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return GraphSample(n, std::move(edges));
}

GraphSample path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return GraphSample(n, std::move(edges));
}

GraphSample star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return GraphSample(leaves + 1, std::move(edges));
}

GraphSample petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});          // outer pentagon
    edges.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    edges.push_back({i, 5 + i});                // spokes
  }
  return GraphSample(10, std::move(edges));
}

}  // namespace builtin
}  // namespace izeta
