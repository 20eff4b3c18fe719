#include "izeta/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace izeta {

namespace {

std::string line_error(int line_no, const std::string& what) {
  return "graph line " + std::to_string(line_no) + ": " + what;
}

}  // namespace

GraphSample read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw std::invalid_argument("graph: empty input");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) {
      throw std::invalid_argument(line_error(line_no, "expected header \"n m\""));
    }
  }
  if (n < 1 || n > (1LL << 30)) throw std::invalid_argument(line_error(line_no, "bad vertex count"));
  if (m < 0 || m > n * (n - 1) / 2) throw std::invalid_argument(line_error(line_no, "bad edge count"));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_line()) throw std::invalid_argument("graph: expected " + std::to_string(m) + " edges, got " + std::to_string(k));
    std::istringstream row(line);
    long long i = 0;
    long long j = 0;
    std::string extra;
    if (!(row >> i >> j) || (row >> extra)) {
      throw std::invalid_argument(line_error(line_no, "expected \"i j\""));
    }
    if (!(0 <= i && i < j && j < n)) {
      throw std::invalid_argument(line_error(line_no, "edge must satisfy 0 <= i < j < n"));
    }
    edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  if (next_line()) throw std::invalid_argument(line_error(line_no, "trailing data after edge list"));
  return GraphSample(static_cast<int>(n), std::move(edges));
}

GraphSample read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const GraphSample& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.first << ' ' << e.second << '\n';
}

GraphSample builtin_graph(std::string_view name) {
  if (name == "c3") return builtin::cycle(3);
  if (name == "c5") return builtin::cycle(5);
  if (name == "k4") return builtin::complete(4);
  if (name == "petersen") return builtin::petersen();
  if (name == "path2") return builtin::path(2);
  throw std::invalid_argument("unknown builtin graph: " + std::string(name));
}

}  // namespace izeta
