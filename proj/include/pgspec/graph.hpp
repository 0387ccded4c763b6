#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pgspec {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph with a dense symmetric adjacency structure.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::vector<std::string> labels);

  std::size_t size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  /// Loops are rejected; adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_.at(v); }
  std::size_t degree(Vertex v) const { return nbrs_.at(v).size(); }
  std::size_t edge_count() const { return edges_; }

  /// Sorted (i < j) edge list.
  std::vector<Edge> edges() const;
  bool connected() const;

  /// Subgraph induced by `vertices`, relabelled 0..|vertices|-1 in the given order.
  Graph induced(const std::vector<Vertex>& vertices) const;
  /// Graph with vertex v renamed perm[v].
  Graph relabeled(const std::vector<Vertex>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<unsigned char> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::size_t edges_ = 0;
};

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

/// "i j" per line, 0-based, i < j, sorted.
std::string to_edge_list(const Graph& g);
/// Accepts "i j" lines; blank lines and '#' comments are skipped. The vertex
/// count is one more than the largest index unless a "# n N" header is present.
Graph parse_edge_list(std::istream& in);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace pgspec
