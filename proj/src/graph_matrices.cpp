#include "pgspec/graph_matrices.hpp"

#include <cmath>
#include <queue>
#include <unordered_set>

#include "pgspec/power_graph.hpp"

namespace pgspec {

AlphaParam::AlphaParam(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0, 1] (got " + std::to_string(alpha) + ")");
}

DenseSymMatrix adjacency(const Graph& g) {
  DenseSymMatrix a(g.size());
  for (const auto& [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

DenseSymMatrix degree_diag(const Graph& g) {
  DenseSymMatrix d(g.size());
  for (Vertex v = 0; v < g.size(); ++v) d.set(v, v, static_cast<double>(g.degree(v)));
  return d;
}

DenseSymMatrix laplacian(const Graph& g) { return degree_diag(g) - adjacency(g); }

DenseSymMatrix signless_laplacian(const Graph& g) { return degree_diag(g) + adjacency(g); }

DenseSymMatrix a_alpha(const Graph& g, AlphaParam alpha) {
  return alpha.value() * degree_diag(g) + alpha.complement() * adjacency(g);
}

DistanceTable shortest_path_lengths(const Graph& g) {
  const std::size_t n = g.size();
  DistanceTable d(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    auto& row = d[s];
    std::queue<Vertex> q;
    row[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          q.push(v);
        }
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (row[v] < 0) throw GraphError("graph is disconnected (no path " + std::to_string(s) + " -> " + std::to_string(v) + ")");
    }
  }
  return d;
}

DenseSymMatrix to_matrix(const DistanceTable& table) {
  DenseSymMatrix m(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i; j < table.size(); ++j) m.set(i, j, table[i][j]);
  return m;
}

DenseSymMatrix distance_matrix(const Graph& g) { return to_matrix(shortest_path_lengths(g)); }

DenseSymMatrix reciprocal_distance(const Graph& g) {
  const auto d = shortest_path_lengths(g);
  DenseSymMatrix rd(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) rd.set(i, j, 1.0 / d[i][j]);
  return rd;
}

DenseSymMatrix reciprocal_transmission(const Graph& g) {
  const auto sums = reciprocal_distance(g).row_sums();
  return DenseSymMatrix::diagonal(sums);
}

DenseSymMatrix rd_alpha(const Graph& g, AlphaParam alpha) {
  const DenseSymMatrix rd = reciprocal_distance(g);
  const auto sums = rd.row_sums();
  return alpha.value() * DenseSymMatrix::diagonal(sums) + alpha.complement() * rd;
}

namespace {

using Clock = std::chrono::steady_clock;

class ClassSearch {
 public:
  ClassSearch(const Graph& g, const std::vector<TwinClass>& classes, Vertex s, Vertex t, const DetourOptions& options,
              Clock::time_point deadline)
      : options_(options), deadline_(deadline) {
    std::vector<Vertex> reps;
    auto add_part = [&](std::vector<Vertex> members) {
      sizes_.push_back(members.size());
      reps.push_back(members.front());
      internal_.push_back(members.size() > 1 && g.adjacent(members[0], members[1]));
    };
    for (const auto& c : classes) {
      std::vector<Vertex> rest;
      for (Vertex v : c.members) {
        if (v == s) {
          source_ = sizes_.size();
          add_part({s});
        } else if (v == t) {
          target_ = sizes_.size();
          add_part({t});
        } else {
          rest.push_back(v);
        }
      }
      if (!rest.empty()) add_part(std::move(rest));
    }
    const std::size_t m = sizes_.size();
    link_.assign(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) link_[a][b] = a == b ? internal_[a] : g.adjacent(reps[a], reps[b]);
    }
    place_.resize(m);
    long double span = static_cast<long double>(m);
    std::uint64_t place = 1;
    for (std::size_t a = 0; a < m; ++a) {
      place_[a] = place;
      span *= static_cast<long double>(sizes_[a] + 1);
      place *= sizes_[a] + 1;
    }
    if (span >= 1.8e19L) throw DetourInfeasible("detour search state space does not fit in 64 bits");
    total_ = g.size();
  }

  int run() {
    counts_.assign(sizes_.size(), 0);
    counts_[source_] = 1;
    dfs(source_, place_[source_], 1);
    return best_;
  }

 private:
  void dfs(std::size_t cur, std::uint64_t code, std::size_t visited) {
    // A Hamiltonian s-t path cannot be beaten.
    if (best_ == static_cast<int>(total_) - 1) return;
    const std::uint64_t key = code * sizes_.size() + cur;
    if (!seen_.insert(key).second) return;
    if (seen_.size() > options_.max_states) throw DetourInfeasible("detour search exceeded the state cap");
    if ((++expansions_ & 1023U) == 0 && Clock::now() > deadline_) {
      throw DetourInfeasible("detour search exceeded the time budget");
    }
    for (std::size_t next = 0; next < sizes_.size(); ++next) {
      if (!link_[cur][next] || counts_[next] >= sizes_[next]) continue;
      if (next == target_) {
        best_ = std::max(best_, static_cast<int>(visited));
        continue;
      }
      ++counts_[next];
      dfs(next, code + place_[next], visited + 1);
      --counts_[next];
    }
  }

  const DetourOptions& options_;
  Clock::time_point deadline_;
  std::vector<std::size_t> sizes_;
  std::vector<char> internal_;
  std::vector<std::vector<char>> link_;
  std::vector<std::uint64_t> place_;
  std::vector<std::size_t> counts_;
  std::unordered_set<std::uint64_t> seen_;
  std::size_t source_ = 0;
  std::size_t target_ = 0;
  std::size_t total_ = 0;
  std::uint64_t expansions_ = 0;
  int best_ = -1;
};

Clock::time_point deadline_for(const DetourOptions& options) {
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(options.time_budget_s));
}

}  // namespace

int longest_path(const Graph& g, Vertex s, Vertex t, const DetourOptions& options) {
  if (s == t) return 0;
  const auto classes = twin_classes(g);
  const int len = ClassSearch(g, classes, s, t, options, deadline_for(options)).run();
  if (len < 0) throw GraphError("no path between " + std::to_string(s) + " and " + std::to_string(t));
  return len;
}

DistanceTable detour_distances(const Graph& g, const DetourOptions& options) {
  if (!g.connected()) throw GraphError("detour distances need a connected graph");
  const std::size_t n = g.size();
  const auto deadline = deadline_for(options);
  const auto classes = twin_classes(g);
  const auto class_of = twin_class_index(classes, n);

  // d_D(s, t) depends only on the twin classes of s and t.
  const std::size_t c = classes.size();
  std::vector<std::vector<int>> by_class(c, std::vector<int>(c, -1));
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = a; b < c; ++b) {
      Vertex s = classes[a].members.front();
      Vertex t = classes[b].members.front();
      if (a == b) {
        if (classes[a].members.size() < 2) continue;
        t = classes[a].members[1];
      }
      by_class[a][b] = by_class[b][a] = ClassSearch(g, classes, s, t, options, deadline).run();
    }
  }

  DistanceTable d(n, std::vector<int>(n, 0));
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (s != t) d[s][t] = by_class[class_of[s]][class_of[t]];
    }
  }
  return d;
}

DenseSymMatrix detour_matrix(const Graph& g, const DetourOptions& options) {
  return to_matrix(detour_distances(g, options));
}

}  // namespace pgspec
