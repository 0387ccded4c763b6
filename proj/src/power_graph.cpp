#include "pgspec/power_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pgspec {

std::string to_string(GraphKind kind) { return kind == GraphKind::power ? "power" : "enhanced"; }

GraphKind parse_graph_kind(const std::string& name) {
  if (name == "power") return GraphKind::power;
  if (name == "enhanced") return GraphKind::enhanced;
  throw std::invalid_argument("unknown graph kind '" + name + "' (expected power or enhanced)");
}

Graph power_graph_from_subgroups(const std::vector<std::vector<Vertex>>& subgroups, std::vector<std::string> labels) {
  Graph g(subgroups.size(), std::move(labels));
  for (Vertex v = 0; v < subgroups.size(); ++v) {
    for (Vertex w : subgroups[v]) {
      if (w != v) g.add_edge(v, w);  // w is a power of v
    }
  }
  return g;
}

Graph enhanced_graph_from_subgroups(const std::vector<std::vector<Vertex>>& subgroups, std::vector<std::string> labels) {
  Graph g(subgroups.size(), std::move(labels));
  for (const auto& members : subgroups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) g.add_edge(members[a], members[b]);
    }
  }
  return g;
}

GroupGraph build_group_graph(const GroupParams& params, GraphKind kind) {
  auto elements = canonical_elements(params);
  std::vector<std::vector<Vertex>> subgroups;
  std::vector<std::string> labels;
  subgroups.reserve(elements.size());
  labels.reserve(elements.size());
  for (const auto& a : elements) {
    std::vector<Vertex> members;
    for (const auto& x : cyclic_subgroup(a, params)) members.push_back(canonical_index(x, params));
    std::sort(members.begin(), members.end());
    subgroups.push_back(std::move(members));
    labels.push_back(to_string(a));
  }
  Graph g = kind == GraphKind::power ? power_graph_from_subgroups(subgroups, std::move(labels))
                                     : enhanced_graph_from_subgroups(subgroups, std::move(labels));
  return {params, kind, std::move(elements), std::move(g)};
}

PartitionClasses classify_partition(const Graph& graph, const GroupParams& params) {
  if (graph.size() != static_cast<std::size_t>(params.order())) {
    throw ClassificationError("graph has " + std::to_string(graph.size()) + " vertices, group order is " +
                              std::to_string(params.order()));
  }
  std::vector<GroupElement> element(graph.size());
  std::set<GroupElement> seen;
  for (Vertex v = 0; v < graph.size(); ++v) {
    auto parsed = parse_element(graph.label(v), params);
    if (!parsed) throw ClassificationError("vertex " + std::to_string(v) + " label '" + graph.label(v) + "' is not a group element");
    if (!seen.insert(*parsed).second) throw ClassificationError("duplicate element label '" + graph.label(v) + "'");
    element[v] = *parsed;
  }

  PartitionClasses c;
  const int half = params.half();
  std::vector<Vertex> by_reflection(static_cast<std::size_t>(params.rotation_order()));
  for (Vertex v = 0; v < graph.size(); ++v) {
    const auto& a = element[v];
    if (a.eps == 0) {
      if (a.i == 0) {
        c.e = v;
        c.h0.push_back(v);
      } else if (a.i == half) {
        c.u = v;
        c.h0.push_back(v);
      } else {
        c.h1.push_back(v);
      }
    } else {
      by_reflection[static_cast<std::size_t>(a.i)] = v;
      (a.i % 2 == 0 ? c.h2 : c.h3).push_back(v);
    }
  }
  for (int j = 1; j < half; j += 2) {
    c.h3_pairs.emplace_back(by_reflection[static_cast<std::size_t>(j)], by_reflection[static_cast<std::size_t>(j + half)]);
  }
  return c;
}

std::vector<TwinClass> twin_classes(const Graph& graph) {
  const std::size_t n = graph.size();
  std::map<std::vector<Vertex>, std::vector<Vertex>> open_groups;
  for (Vertex v = 0; v < n; ++v) open_groups[graph.neighbors(v)].push_back(v);

  std::vector<char> assigned(n, 0);
  std::vector<TwinClass> out;
  for (auto& [key, members] : open_groups) {
    if (members.size() < 2) continue;
    for (Vertex v : members) assigned[v] = 1;
    out.push_back({TwinKind::open, members});
  }

  std::map<std::vector<Vertex>, std::vector<Vertex>> closed_groups;
  for (Vertex v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    auto closed = graph.neighbors(v);
    closed.insert(std::upper_bound(closed.begin(), closed.end(), v), v);
    closed_groups[std::move(closed)].push_back(v);
  }
  for (auto& [key, members] : closed_groups) {
    out.push_back({members.size() < 2 ? TwinKind::singleton : TwinKind::closed, members});
  }
  std::sort(out.begin(), out.end(), [](const TwinClass& a, const TwinClass& b) { return a.members.front() < b.members.front(); });
  return out;
}

std::vector<std::size_t> twin_class_index(const std::vector<TwinClass>& classes, std::size_t n) {
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Vertex v : classes[c].members) idx.at(v) = c;
  }
  return idx;
}

DecompositionReport verify_decomposition(const Graph& graph, const PartitionClasses& classes,
                                         const GroupParams& params, RotationPiece piece) {
  std::set<Edge> expected;
  auto add = [&](Vertex a, Vertex b) { expected.insert(a < b ? Edge{a, b} : Edge{b, a}); };

  // <r> in exponent order: e, then H1 and u by exponent.
  const int n_rot = params.rotation_order();
  std::vector<Vertex> rot(static_cast<std::size_t>(n_rot));
  for (Vertex v = 0; v < graph.size(); ++v) {
    auto a = parse_element(graph.label(v), params);
    if (a && a->eps == 0) rot[static_cast<std::size_t>(a->i)] = v;
  }
  auto rot_order = [&](int i) { return n_rot / std::gcd(i, n_rot); };
  for (int i = 0; i < n_rot; ++i) {
    for (int j = i + 1; j < n_rot; ++j) {
      const int oi = rot_order(i), oj = rot_order(j);
      const bool linked = piece == RotationPiece::clique || oi % oj == 0 || oj % oi == 0;
      if (linked) add(rot[static_cast<std::size_t>(i)], rot[static_cast<std::size_t>(j)]);
    }
  }
  for (Vertex h : classes.h2) add(classes.e, h);
  for (const auto& [x, y] : classes.h3_pairs) {
    const Vertex quad[4] = {classes.e, classes.u, x, y};
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) add(quad[a], quad[b]);
  }

  DecompositionReport r;
  r.expected_edges = expected.size();
  r.actual_edges = graph.edge_count();
  const auto actual = graph.edges();
  std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(r.missing));
  std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(r.extra));
  r.ok = r.missing.empty() && r.extra.empty();
  return r;
}

std::map<std::size_t, std::size_t> predicted_degree_multiset(const GroupParams& params) {
  const auto n = static_cast<std::size_t>(params.order());
  const auto rot = static_cast<std::size_t>(params.rotation_order());
  const auto half = static_cast<std::size_t>(params.half());
  std::map<std::size_t, std::size_t> m;
  m[n - 1] += 1;
  m[3 * half - 1] += 1;
  m[rot - 1] += rot - 2;
  m[1] += half;
  m[3] += half;
  return m;
}

std::map<std::size_t, std::size_t> degree_multiset(const Graph& graph) {
  std::map<std::size_t, std::size_t> m;
  for (Vertex v = 0; v < graph.size(); ++v) m[graph.degree(v)] += 1;
  return m;
}

}  // namespace pgspec
