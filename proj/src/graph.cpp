#include "pgspec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>

namespace pgspec {

Graph::Graph(std::size_t n) : Graph(n, {}) {}

Graph::Graph(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)), adj_(n * n, 0), nbrs_(n) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != n) throw GraphError("label count does not match vertex count");
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
  if (adjacent(u, v)) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(nbrs_[u], v);
  insert_sorted(nbrs_[v], u);
  ++edges_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : nbrs_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex v : nbrs_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
    }
  }
  return count == n_;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (Vertex v : vertices) labels.push_back(labels_.at(v));
  Graph g(vertices.size(), std::move(labels));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacent(vertices[a], vertices[b])) g.add_edge(a, b);
    }
  }
  return g;
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  if (perm.size() != n_) throw GraphError("permutation size mismatch");
  std::vector<std::string> labels(n_);
  for (Vertex v = 0; v < n_; ++v) labels.at(perm[v]) = labels_[v];
  Graph g(n_, std::move(labels));
  for (const auto& [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

bool parse_index(std::string_view token, std::size_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t declared = 0;
  bool has_declared = false;
  std::size_t max_index = 0;
  bool any = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (a[0] == '#') {
      std::string key;
      if (fields >> key && key == "n") {
        std::string count;
        if (!(fields >> count) || !parse_index(count, declared)) throw ParseError(lineno, "malformed vertex-count header");
        has_declared = true;
      }
      continue;
    }
    if (!(fields >> b)) throw ParseError(lineno, "expected two vertex indices");
    if (fields >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    std::size_t u = 0, v = 0;
    if (!parse_index(a, u)) throw ParseError(lineno, "invalid vertex index '" + a + "'");
    if (!parse_index(b, v)) throw ParseError(lineno, "invalid vertex index '" + b + "'");
    if (u == v) throw ParseError(lineno, "self-loop on vertex " + a);
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
    any = true;
  }
  std::size_t n = any ? max_index + 1 : 0;
  if (has_declared) {
    if (declared < n) throw ParseError(lineno, "edge index exceeds declared vertex count");
    n = declared;
  }
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"labels", g.labels()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    Graph g(n, std::move(labels));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError("edge entries must be [u, v] pairs");
      g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw GraphError(std::string("invalid graph JSON: ") + ex.what());
  }
}

}  // namespace pgspec
