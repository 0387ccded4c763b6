#pragma once

#include <map>
#include <string>
#include <vector>

#include "pgspec/graph.hpp"
#include "pgspec/group.hpp"

namespace pgspec {

/// power:    x ~ y iff x in <y> or y in <x>.
/// enhanced: x ~ y iff x and y lie in a common cyclic subgroup.
/// For G(k, p) the enhanced graph is the one whose <r> part is complete.
enum class GraphKind { power, enhanced };

std::string to_string(GraphKind kind);
GraphKind parse_graph_kind(const std::string& name);

/// subgroups[v] lists the vertices of the cyclic subgroup generated by v.
Graph power_graph_from_subgroups(const std::vector<std::vector<Vertex>>& subgroups, std::vector<std::string> labels);
Graph enhanced_graph_from_subgroups(const std::vector<std::vector<Vertex>>& subgroups, std::vector<std::string> labels);

/// Graph on G(k, p) in canonical vertex order (see canonical_elements).
struct GroupGraph {
  GroupParams params;
  GraphKind kind;
  std::vector<GroupElement> elements;
  Graph graph;
};

GroupGraph build_group_graph(const GroupParams& params, GraphKind kind);
inline GroupGraph build_power_graph(const GroupParams& params) { return build_group_graph(params, GraphKind::power); }
inline GroupGraph build_enhanced_power_graph(const GroupParams& params) {
  return build_group_graph(params, GraphKind::enhanced);
}

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H0 = {e, u}, H1 = <r> \ H0, H2 = {s r^even}, H3 = {s r^odd}.
struct PartitionClasses {
  std::vector<Vertex> h0, h1, h2, h3;
  Vertex e = 0;
  Vertex u = 0;
  /// Pairs {s r^j, s r^(j + 2^(k-1) p)} for odd j < 2^(k-1) p.
  std::vector<std::pair<Vertex, Vertex>> h3_pairs;
};

/// Classifies by the group element behind each vertex label; throws
/// ClassificationError if the labels are not the elements of G(k, p).
PartitionClasses classify_partition(const Graph& graph, const GroupParams& params);

enum class TwinKind { singleton, open, closed };

struct TwinClass {
  TwinKind kind = TwinKind::singleton;
  std::vector<Vertex> members;  // ascending
};

/// Maximal twin classes ordered by smallest member; singletons included.
std::vector<TwinClass> twin_classes(const Graph& graph);
/// class_of[v] = index into the twin_classes() result.
std::vector<std::size_t> twin_class_index(const std::vector<TwinClass>& classes, std::size_t n);

/// How the P(Z_{2^k p}) piece is read when rebuilding the expected edge set.
enum class RotationPiece {
  clique,            // K_{2^k p}: the reading every closed form relies on
  cyclic_power_graph // the genuine power graph of the cyclic group
};

struct DecompositionReport {
  bool ok = false;
  std::size_t expected_edges = 0;
  std::size_t actual_edges = 0;
  std::vector<Edge> missing;  // expected but absent
  std::vector<Edge> extra;    // present but not expected
};

/// Edge-union reading: <r> piece, pendants h2 - e, and a K4 on {e, u, x, xu}
/// for every H3 pair.
DecompositionReport verify_decomposition(const Graph& graph, const PartitionClasses& classes,
                                         const GroupParams& params, RotationPiece piece = RotationPiece::clique);

/// Degree multiset the closed forms assume: {n-1, 3*2^(k-1)p - 1, (2^k p - 1)^(2^k p - 2), 1^(2^(k-1)p), 3^(2^(k-1)p)}.
std::map<std::size_t, std::size_t> predicted_degree_multiset(const GroupParams& params);
std::map<std::size_t, std::size_t> degree_multiset(const Graph& graph);

}  // namespace pgspec
