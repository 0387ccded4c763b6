#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "pgspec/group.hpp"
#include "pgspec/power_graph.hpp"

using namespace pgspec;

namespace {

// Powers of every element computed from the word-rewriting Cayley table,
// indexed in canonical order.
std::vector<std::set<std::size_t>> table_powers(const GroupParams& params) {
  const auto t = CayleyTable::build(params);
  const auto& els = t.elements();
  std::vector<std::size_t> to_canon(els.size());
  for (std::size_t i = 0; i < els.size(); ++i) to_canon[i] = canonical_index(els[i], params);
  const std::size_t id = std::find(els.begin(), els.end(), identity_element) - els.begin();
  std::vector<std::set<std::size_t>> out(els.size());
  for (std::size_t a = 0; a < els.size(); ++a) {
    std::size_t x = id;
    do {
      out[to_canon[a]].insert(to_canon[x]);
      x = t.product(x, a);
    } while (x != id);
  }
  return out;
}

Graph oracle_power_graph(const GroupParams& params) {
  const auto pw = table_powers(params);
  Graph g(pw.size());
  for (std::size_t a = 0; a < pw.size(); ++a)
    for (std::size_t b = a + 1; b < pw.size(); ++b)
      if (pw[a].count(b) || pw[b].count(a)) g.add_edge(a, b);
  return g;
}

Graph oracle_enhanced_graph(const GroupParams& params) {
  const auto pw = table_powers(params);
  Graph g(pw.size());
  for (std::size_t a = 0; a < pw.size(); ++a)
    for (std::size_t b = a + 1; b < pw.size(); ++b)
      for (const auto& sub : pw)
        if (sub.count(a) && sub.count(b)) {
          g.add_edge(a, b);
          break;
        }
  return g;
}

const GroupParams P23 = GroupParams::make(2, 3);

}  // namespace

TEST_CASE("graphs agree with the Cayley table oracle") {
  for (auto [k, p] : {std::pair{2, 3}, {2, 5}, {3, 3}}) {
    const auto g = GroupParams::make(k, p);
    CHECK(build_power_graph(g).graph == oracle_power_graph(g));
    CHECK(build_enhanced_power_graph(g).graph == oracle_enhanced_graph(g));
  }
}

TEST_CASE("vertex order and labels") {
  const auto gg = build_power_graph(P23);
  REQUIRE(gg.graph.size() == 24);
  CHECK(gg.graph.label(0) == "e");
  CHECK(gg.graph.label(1) == "r");
  CHECK(gg.graph.label(6) == "r^6");
  CHECK(gg.graph.label(12) == "s");
  CHECK(gg.graph.label(13) == "s r^2");
  CHECK(gg.graph.label(18) == "s r");
  CHECK(gg.graph.label(23) == "s r^11");
}

TEST_CASE("degrees shared by both graphs") {
  for (auto kind : {GraphKind::power, GraphKind::enhanced}) {
    const auto gg = build_group_graph(P23, kind);
    const auto c = classify_partition(gg.graph, P23);
    CHECK(gg.graph.degree(c.e) == 23);
    for (Vertex v : c.h2) CHECK(gg.graph.degree(v) == 1);
    for (Vertex v : c.h3) CHECK(gg.graph.degree(v) == 3);
  }
}

TEST_CASE("identity is universal") {
  for (auto [k, p] : {std::pair{2, 3}, {2, 5}, {3, 3}, {2, 7}}) {
    const auto gg = build_power_graph(GroupParams::make(k, p));
    CHECK(gg.graph.degree(0) == gg.graph.size() - 1);
    CHECK(gg.graph.connected());
  }
}

TEST_CASE("enhanced graph matches the class degree table") {
  const auto gg = build_enhanced_power_graph(P23);
  const auto c = classify_partition(gg.graph, P23);
  for (Vertex v : c.h1) CHECK(gg.graph.degree(v) == 11);
  CHECK(gg.graph.degree(c.u) == 17);
  CHECK(gg.graph.edge_count() == 87);
  for (auto [k, p] : {std::pair{2, 3}, {2, 5}, {3, 3}}) {
    const auto g = GroupParams::make(k, p);
    CHECK(degree_multiset(build_enhanced_power_graph(g).graph) == predicted_degree_multiset(g));
  }
}

TEST_CASE("power graph degrees") {
  const auto gg = build_power_graph(P23);
  CHECK(gg.graph.edge_count() == 77);
  const std::map<std::size_t, std::size_t> want{{1, 6}, {3, 6}, {7, 2}, {8, 2}, {9, 2}, {11, 4}, {15, 1}, {23, 1}};
  CHECK(degree_multiset(gg.graph) == want);
  CHECK(degree_multiset(gg.graph) != predicted_degree_multiset(P23));
  const auto c = classify_partition(gg.graph, P23);
  CHECK(gg.graph.degree(c.u) == 15);
  CHECK_FALSE(gg.graph.adjacent(2, 3));  // r^2 and r^3 generate incomparable subgroups
}

TEST_CASE("partition classes") {
  const auto gg = build_power_graph(P23);
  const auto c = classify_partition(gg.graph, P23);
  CHECK(c.h0.size() == 2);
  CHECK(c.h1.size() == 10);
  CHECK(c.h2.size() == 6);
  CHECK(c.h3.size() == 6);
  CHECK(gg.graph.label(c.u) == "r^6");
  CHECK(gg.graph.label(c.e) == "e");
  REQUIRE(c.h3_pairs.size() == 3);
  CHECK(gg.graph.label(c.h3_pairs[0].first) == "s r");
  CHECK(gg.graph.label(c.h3_pairs[0].second) == "s r^7");

  const auto p25 = GroupParams::make(2, 5);
  const auto c25 = classify_partition(build_power_graph(p25).graph, p25);
  CHECK(c25.h2.size() == 10);
  CHECK(c25.h1.size() == 18);
}

TEST_CASE("classification rejects foreign graphs") {
  CHECK_THROWS_AS(classify_partition(complete_graph(24), P23), ClassificationError);
  CHECK_THROWS_AS(classify_partition(complete_graph(5), P23), ClassificationError);
}

TEST_CASE("twin classes of the family") {
  for (auto kind : {GraphKind::power, GraphKind::enhanced}) {
    const auto gg = build_group_graph(P23, kind);
    const auto c = classify_partition(gg.graph, P23);
    const auto classes = twin_classes(gg.graph);
    const auto idx = twin_class_index(classes, gg.graph.size());
    const auto& h2 = classes[idx[c.h2.front()]];
    CHECK(h2.kind == TwinKind::open);
    CHECK(h2.members == c.h2);
    for (const auto& [x, y] : c.h3_pairs) {
      const auto& pair = classes[idx[x]];
      CHECK(pair.kind == TwinKind::closed);
      CHECK(pair.members == std::vector<Vertex>{x, y});
    }
  }
  const auto enh = build_enhanced_power_graph(P23);
  const auto c = classify_partition(enh.graph, P23);
  const auto classes = twin_classes(enh.graph);
  const auto& t2 = classes[twin_class_index(classes, 24)[c.h1.front()]];
  CHECK(t2.kind == TwinKind::closed);
  CHECK(t2.members == c.h1);

  const auto pow = build_power_graph(P23);
  const auto pclasses = twin_classes(pow.graph);
  CHECK(pclasses[twin_class_index(pclasses, 24)[c.h1.front()]].members.size() < c.h1.size());
}

TEST_CASE("twin classes are maximal and exact") {
  const auto check = [](const Graph& g) {
    const auto classes = twin_classes(g);
    const auto idx = twin_class_index(classes, g.size());
    for (Vertex u = 0; u < g.size(); ++u)
      for (Vertex v = u + 1; v < g.size(); ++v) {
        auto nu = g.neighbors(u);
        auto nv = g.neighbors(v);
        const bool open = nu == nv;
        nu.push_back(u);
        nv.push_back(v);
        std::sort(nu.begin(), nu.end());
        std::sort(nv.begin(), nv.end());
        const bool closed = nu == nv;
        CHECK((open || closed) == (idx[u] == idx[v]));
      }
  };
  check(build_power_graph(P23).graph);
  check(build_enhanced_power_graph(GroupParams::make(2, 5)).graph);
  check(path_graph(4));
  check(star_graph(5));
  check(complete_graph(4));
  CHECK(twin_classes(complete_graph(4)).size() == 1);
  CHECK(twin_classes(complete_graph(4)).front().kind == TwinKind::closed);
  CHECK(twin_classes(path_graph(4)).size() == 4);
}

TEST_CASE("decomposition under the clique reading") {
  for (auto [k, p] : {std::pair{2, 3}, {2, 5}, {3, 3}}) {
    const auto g = GroupParams::make(k, p);
    const auto enh = build_enhanced_power_graph(g);
    const auto rep = verify_decomposition(enh.graph, classify_partition(enh.graph, g), g);
    CHECK(rep.ok);
    CHECK(rep.missing.empty());
    CHECK(rep.extra.empty());
  }
  const auto enh = build_enhanced_power_graph(P23);
  const auto rep = verify_decomposition(enh.graph, classify_partition(enh.graph, P23), P23);
  CHECK(rep.expected_edges == 87);
  const auto [x, y] = classify_partition(enh.graph, P23).h3_pairs[0];
  CHECK(enh.graph.induced({0, 6, x, y}).edge_count() == 6);
}

TEST_CASE("power graph decomposes with the cyclic piece") {
  for (auto [k, p] : {std::pair{2, 3}, {2, 5}, {3, 3}}) {
    const auto g = GroupParams::make(k, p);
    const auto pg = build_power_graph(g);
    const auto classes = classify_partition(pg.graph, g);
    const auto clique = verify_decomposition(pg.graph, classes, g, RotationPiece::clique);
    CHECK_FALSE(clique.ok);
    CHECK(clique.extra.empty());
    for (const auto& [a, b] : clique.missing) {
      CHECK(parse_element(pg.graph.label(a), g)->eps == 0);
      CHECK(parse_element(pg.graph.label(b), g)->eps == 0);
    }
    CHECK(verify_decomposition(pg.graph, classes, g, RotationPiece::cyclic_power_graph).ok);
  }
  const auto pg = build_power_graph(P23);
  const auto rep = verify_decomposition(pg.graph, classify_partition(pg.graph, P23), P23);
  CHECK(rep.missing.size() == 10);
  const auto [x, y] = classify_partition(pg.graph, P23).h3_pairs[0];
  CHECK(pg.graph.induced({0, 6, x, y}).edge_count() == 6);
}

TEST_CASE("graph kind names") {
  CHECK(parse_graph_kind("power") == GraphKind::power);
  CHECK(parse_graph_kind("enhanced") == GraphKind::enhanced);
  CHECK(to_string(GraphKind::enhanced) == "enhanced");
  CHECK_THROWS(parse_graph_kind("directed"));
}
