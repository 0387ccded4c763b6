#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>

#include "pgspec/metric.hpp"
#include "pgspec/power_graph.hpp"

using namespace pgspec;

namespace {

std::vector<Vertex> members(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

bool brute_resolves(const DistanceTable& d, const std::vector<Vertex>& set) {
  std::set<std::vector<int>> seen;
  for (std::size_t v = 0; v < d.size(); ++v) {
    std::vector<int> r;
    for (Vertex w : set) r.push_back(d[w][v]);
    if (!seen.insert(r).second) return false;
  }
  return true;
}

std::size_t brute_metric_dimension(const Graph& g) {
  const auto d = shortest_path_lengths(g);
  std::size_t best = g.size();
  for (std::uint32_t m = 1; m < (1u << g.size()); ++m) {
    const auto set = members(m);
    if (set.size() < best && brute_resolves(d, set)) best = set.size();
  }
  return best;
}

// w strongly resolves u, v when one of them lies on a shortest path from w to the other.
std::size_t brute_strong_dimension(const Graph& g) {
  const auto d = shortest_path_lengths(g);
  const std::size_t n = g.size();
  std::size_t best = n;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    const auto set = members(m);
    if (set.size() >= best) continue;
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = u + 1; v < n && ok; ++v) {
        bool hit = false;
        for (Vertex w : set)
          if (d[w][u] == d[w][v] + d[v][u] || d[w][v] == d[w][u] + d[u][v]) hit = true;
        ok = hit;
      }
    if (ok) best = set.size();
  }
  return best;
}

std::size_t brute_vertex_cover(const Graph& g) {
  std::size_t best = g.size();
  for (std::uint32_t m = 0; m < (1u << g.size()); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) >= best) continue;
    bool ok = true;
    for (const auto& [a, b] : g.edges())
      if (!((m >> a) & 1u) && !((m >> b) & 1u)) ok = false;
    if (ok) best = static_cast<std::size_t>(std::popcount(m));
  }
  return best;
}

Graph random_connected(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("resolve_check") {
  const auto p = path_graph(5);
  const std::vector<Vertex> end{0}, mid{2}, none{};
  CHECK(resolve_check(p, end));
  CHECK_FALSE(resolve_check(p, mid));
  CHECK_FALSE(resolve_check(p, none));
  CHECK(resolve_check(complete_graph(1), none));
}

TEST_CASE("classical metric dimensions") {
  for (std::size_t n = 2; n <= 10; ++n) {
    CHECK(metric_dimension(path_graph(n)).psi == 1);
    CHECK(metric_dimension(complete_graph(n)).psi == n - 1);
    if (n >= 3) CHECK(metric_dimension(cycle_graph(n)).psi == 2);
    if (n >= 3) CHECK(metric_dimension(star_graph(n - 1)).psi == n - 2);
  }
}

TEST_CASE("exhaustive search matches brute force") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    const auto g = random_connected(rng, 4 + t % 7, 0.3);
    const auto r = metric_dimension(g);
    CHECK(r.certified);
    CHECK(r.method == "exhaustive");
    CHECK(r.psi == brute_metric_dimension(g));
    CHECK(r.witness.size() == *r.psi);
    CHECK(resolve_check(g, r.witness));
    CHECK(r.lower_bound <= *r.psi);
  }
}

TEST_CASE("twin lower bound") {
  CHECK(twin_lower_bound(complete_graph(6)) == 5);
  CHECK(twin_lower_bound(star_graph(4)) == 3);
  CHECK(twin_lower_bound(path_graph(5)) == 0);
}

TEST_CASE("metric dimension of the enhanced graph") {
  const std::vector<std::tuple<int, int, std::size_t>> cases{{2, 3, 17}, {2, 5, 31}, {3, 3, 38}};
  for (auto [k, p, want] : cases) {
    const auto params = GroupParams::make(k, p);
    const auto g = build_enhanced_power_graph(params).graph;
    const auto r = metric_dimension(g);
    CHECK(r.lower_bound == want);
    CHECK(r.certified);
    CHECK(r.psi == want);
    const auto w = family_resolving_witness(g, params);
    CHECK(w.size() == want);
    CHECK(resolve_check(g, w));
  }
}

TEST_CASE("metric dimension of the power graph") {
  const std::vector<std::tuple<int, int, std::size_t, std::size_t>> cases{{2, 3, 14, 15}, {2, 5, 28, 29}};
  for (auto [k, p, bound, want] : cases) {
    const auto params = GroupParams::make(k, p);
    const auto g = build_power_graph(params).graph;
    const auto r = metric_dimension(g);
    CHECK(r.lower_bound == bound);
    CHECK(r.psi == want);
    CHECK(r.method == "twin-extension");
    CHECK(resolve_check(g, r.witness));
    const auto w = family_resolving_witness(g, params);
    CHECK(resolve_check(g, w));
    CHECK(w.size() > want);
  }
}

TEST_CASE("extension cap") {
  MetricOptions opts;
  opts.exhaustive_limit = 0;
  opts.max_extension = 0;
  CHECK_THROWS_AS(metric_dimension(cycle_graph(6), opts), SearchLimitError);
}

TEST_CASE("mmd graph") {
  const auto m = mmd_graph(path_graph(5));
  CHECK(m.edge_count() == 1);
  CHECK(m.adjacent(0, 4));
  CHECK(mmd_graph(complete_graph(4)) == complete_graph(4));
  const auto s = mmd_graph(star_graph(3));
  CHECK(s.edge_count() == 3);
  CHECK(s.degree(0) == 0);
}

TEST_CASE("minimum vertex cover matches brute force") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_connected(rng, 3 + t % 10, 0.35);
    const auto c = min_vertex_cover(g);
    CHECK(c.size == brute_vertex_cover(g));
    CHECK(c.witness.size() == c.size);
    for (const auto& [a, b] : g.edges())
      CHECK((std::find(c.witness.begin(), c.witness.end(), a) != c.witness.end() ||
             std::find(c.witness.begin(), c.witness.end(), b) != c.witness.end()));
  }
  CHECK(min_vertex_cover(Graph(64)).size == 0);
  CHECK_THROWS(min_vertex_cover(Graph(65)));
}

TEST_CASE("classical strong metric dimensions") {
  for (std::size_t n = 2; n <= 9; ++n) {
    CHECK(strong_metric_dimension(complete_graph(n)).value == n - 1);
    CHECK(strong_metric_dimension(path_graph(n)).value == 1);
    if (n >= 3) CHECK(strong_metric_dimension(cycle_graph(n)).value == (n + 1) / 2);
    if (n >= 3) CHECK(strong_metric_dimension(star_graph(n - 1)).value == n - 2);
  }
}

TEST_CASE("strong metric dimension matches brute force") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_connected(rng, 4 + t % 6, 0.3);
    CHECK(strong_metric_dimension(g).value == brute_strong_dimension(g));
  }
}

TEST_CASE("strong metric dimension of the group graphs") {
  const auto p23 = GroupParams::make(2, 3);
  const auto enh = strong_metric_dimension(build_enhanced_power_graph(p23).graph);
  CHECK(enh.value == 21);
  CHECK(enh.resolving_graph.edge_count() == 237);
  const auto pow = strong_metric_dimension(build_power_graph(p23).graph);
  CHECK(pow.value == 20);
  CHECK(pow.resolving_graph.edge_count() == 211);
  const auto p25 = GroupParams::make(2, 5);
  CHECK(strong_metric_dimension(build_enhanced_power_graph(p25).graph).value == 37);
  CHECK(strong_metric_dimension(build_power_graph(p25).graph).value == 36);
}

TEST_CASE("json output") {
  const auto r = metric_dimension(cycle_graph(5));
  const auto j = to_json(r);
  CHECK(j["psi"] == 2);
  CHECK(j["certified"] == true);
  CHECK(to_json(strong_metric_dimension(path_graph(3)))["value"] == 1);
}
