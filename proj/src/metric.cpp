#include "pgspec/metric.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

#include "pgspec/power_graph.hpp"

namespace pgspec {

bool resolve_check(const DistanceTable& dist, std::span<const Vertex> set) {
  const std::size_t n = dist.size();
  std::vector<std::vector<int>> codes(n, std::vector<int>(set.size()));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t j = 0; j < set.size(); ++j) codes[v][j] = dist[v][set[j]];
  std::sort(codes.begin(), codes.end());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

bool resolve_check(const Graph& g, std::span<const Vertex> set) {
  return resolve_check(shortest_path_lengths(g), set);
}

std::size_t twin_lower_bound(const Graph& g) {
  std::size_t bound = 0;
  for (const auto& c : twin_classes(g)) bound += c.members.size() - 1;
  return bound;
}

namespace {

// Visits every size-r subset of pool in lexicographic order until fn returns true.
template <class Fn>
bool for_each_subset(const std::vector<Vertex>& pool, std::size_t r, Fn&& fn) {
  if (r > pool.size()) return false;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Vertex> chosen(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) chosen[i] = pool[idx[i]];
    if (fn(chosen)) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == pool.size() - r + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ResolvingReport metric_dimension(const Graph& g, const MetricOptions& options) {
  const DistanceTable dist = shortest_path_lengths(g);
  const std::size_t n = g.size();
  ResolvingReport rep;
  const auto classes = twin_classes(g);
  for (const auto& c : classes) rep.lower_bound += c.members.size() - 1;

  if (n <= options.exhaustive_limit) {
    rep.method = "exhaustive";
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t r = rep.lower_bound; r <= n; ++r) {
      if (for_each_subset(all, r, [&](const std::vector<Vertex>& s) {
            if (!resolve_check(dist, s)) return false;
            rep.witness = s;
            return true;
          })) {
        rep.resolved = true;
        rep.psi = r;
        rep.certified = true;
        return rep;
      }
    }
    return rep;
  }

  rep.method = "twin-extension";
  std::vector<Vertex> base;
  std::vector<Vertex> pool;
  for (const auto& c : classes) {
    pool.push_back(c.members.front());
    base.insert(base.end(), c.members.begin() + 1, c.members.end());
  }
  std::sort(pool.begin(), pool.end());
  for (std::size_t t = 0; t <= options.max_extension; ++t) {
    if (for_each_subset(pool, t, [&](const std::vector<Vertex>& extra) {
          std::vector<Vertex> set = base;
          set.insert(set.end(), extra.begin(), extra.end());
          if (!resolve_check(dist, set)) return false;
          std::sort(set.begin(), set.end());
          rep.witness = std::move(set);
          return true;
        })) {
      rep.resolved = true;
      rep.psi = rep.lower_bound + t;
      rep.certified = true;
      return rep;
    }
  }
  throw SearchLimitError("no resolving set within " + std::to_string(options.max_extension) +
                         " vertices of the twin base");
}

std::vector<Vertex> family_resolving_witness(const Graph& g, const GroupParams& params) {
  std::map<GroupElement, Vertex> where;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto el = parse_element(g.label(v), params);
    if (!el) throw ClassificationError("vertex label '" + g.label(v) + "' is not a group element");
    where[*el] = v;
  }
  const auto at = [&](const GroupElement& el) {
    const auto it = where.find(el);
    if (it == where.end()) throw ClassificationError("missing element " + to_string(el));
    return it->second;
  };
  const int rot = params.rotation_order();
  std::vector<Vertex> w;
  for (int i = 1; i <= rot - 2; ++i)
    if (i != params.half()) w.push_back(at(rotation(i, params)));
  for (int i = 2; i < rot; i += 2) w.push_back(at(reflection(i, params)));
  for (int i = 1; i < params.half(); i += 2) w.push_back(at(reflection(i, params)));
  std::sort(w.begin(), w.end());
  return w;
}

Graph mmd_graph(const Graph& g, const DistanceTable& dist) {
  const std::size_t n = g.size();
  const auto maximally_distant = [&](Vertex u, Vertex v) {
    for (Vertex x : g.neighbors(u))
      if (dist[v][x] > dist[u][v]) return false;
    return true;
  };
  Graph out(n, g.labels());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (maximally_distant(u, v) && maximally_distant(v, u)) out.add_edge(u, v);
  return out;
}

Graph mmd_graph(const Graph& g) { return mmd_graph(g, shortest_path_lengths(g)); }

namespace {

// Maximum clique on bitset adjacency, colour-bounded branch and bound.
class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  std::uint64_t run() {
    const std::size_t n = adj_.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    expand(0, 0, all);
    return best_set_;
  }

 private:
  void expand(std::uint64_t current, int size, std::uint64_t cand) {
    std::vector<int> order;
    std::vector<int> bound;
    std::uint64_t uncoloured = cand;
    int colour = 0;
    while (uncoloured) {
      ++colour;
      std::uint64_t q = uncoloured;
      while (q) {
        const int v = std::countr_zero(q);
        const std::uint64_t bit = std::uint64_t{1} << v;
        q &= ~bit & ~adj_[v];
        uncoloured &= ~bit;
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best_) return;
      const int v = order[i];
      const std::uint64_t bit = std::uint64_t{1} << v;
      const std::uint64_t next = cand & adj_[v];
      if (next == 0) {
        if (size + 1 > best_) {
          best_ = size + 1;
          best_set_ = current | bit;
        }
      } else {
        expand(current | bit, size + 1, next);
      }
      cand &= ~bit;
    }
  }

  std::vector<std::uint64_t> adj_;
  int best_ = 0;
  std::uint64_t best_set_ = 0;
};

}  // namespace

VertexCover min_vertex_cover(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 64) throw SearchLimitError("vertex cover search supports at most 64 vertices");
  VertexCover vc;
  if (n == 0) return vc;
  std::vector<std::uint64_t> comp(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) comp[u] |= std::uint64_t{1} << v;
  const std::uint64_t independent = CliqueSearch(std::move(comp)).run();
  for (Vertex v = 0; v < n; ++v)
    if (!(independent >> v & 1)) vc.witness.push_back(v);
  vc.size = vc.witness.size();
  return vc;
}

StrongDimension strong_metric_dimension(const Graph& g) {
  StrongDimension s;
  s.resolving_graph = mmd_graph(g);
  s.cover = min_vertex_cover(s.resolving_graph);
  s.value = s.cover.size;
  return s;
}

nlohmann::json to_json(const ResolvingReport& r) {
  nlohmann::json j{{"bound", r.lower_bound},
                   {"witness", r.witness},
                   {"resolved", r.resolved},
                   {"certified", r.certified},
                   {"method", r.method}};
  j["psi"] = r.psi ? nlohmann::json(*r.psi) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const StrongDimension& s) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : s.resolving_graph.edges()) edges.push_back({u, v});
  return {{"value", s.value}, {"cover_witness", s.cover.witness}, {"gsr_edges", edges}};
}

}  // namespace pgspec
