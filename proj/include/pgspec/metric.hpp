#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgspec/graph.hpp"
#include "pgspec/graph_matrices.hpp"
#include "pgspec/group.hpp"

namespace pgspec {

class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True iff the distance vectors r(v | R) are pairwise distinct.
bool resolve_check(const DistanceTable& dist, std::span<const Vertex> set);
bool resolve_check(const Graph& g, std::span<const Vertex> set);

/// Sum over twin classes of (size - 1).
std::size_t twin_lower_bound(const Graph& g);

struct ResolvingReport {
  std::size_t lower_bound = 0;
  std::vector<Vertex> witness;
  bool resolved = false;
  std::optional<std::size_t> psi;  // set once the minimum is established
  bool certified = false;
  std::string method;  // "exhaustive" or "twin-extension"
};

struct MetricOptions {
  std::size_t exhaustive_limit = 12;
  /// Largest number of vertices added to the twin base before giving up.
  std::size_t max_extension = 3;
};

/// Exact search by increasing subset size when n <= exhaustive_limit.
/// Larger graphs: every resolving set holds all but one member of each twin
/// class, and twin swaps are automorphisms, so the omitted member can be
/// fixed; the base is then extended by 0, 1, ... extra vertices. Throws
/// SearchLimitError when the extension cap is reached without a resolving set.
ResolvingReport metric_dimension(const Graph& g, const MetricOptions& options = {});

/// Resolving set for the power graph of G(k, p): r^1 .. r^(2^k p - 2) without u,
/// every s r^(2t) except s, and s r, s r^3, ..., s r^(h - 1). Located through
/// vertex labels.
std::vector<Vertex> family_resolving_witness(const Graph& g, const GroupParams& params);

/// Edge uv iff u and v are mutually maximally distant.
Graph mmd_graph(const Graph& g);
Graph mmd_graph(const Graph& g, const DistanceTable& dist);

struct VertexCover {
  std::size_t size = 0;
  std::vector<Vertex> witness;  // ascending
};

/// Exact minimum vertex cover as the complement of a maximum independent
/// set (branch and bound, greedy colouring bound). n <= 64.
VertexCover min_vertex_cover(const Graph& g);

struct StrongDimension {
  std::size_t value = 0;
  VertexCover cover;
  Graph resolving_graph;
};

StrongDimension strong_metric_dimension(const Graph& g);

nlohmann::json to_json(const ResolvingReport& r);
nlohmann::json to_json(const StrongDimension& s);

}  // namespace pgspec
