#include "pgspec/distance_seq.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pgspec {

EccentricityProfile eccentricity_profile(const DistanceTable& dist) {
  EccentricityProfile p;
  for (const auto& row : dist) p.ecc.push_back(row.empty() ? 0 : *std::max_element(row.begin(), row.end()));
  if (!p.ecc.empty()) {
    p.radius = *std::min_element(p.ecc.begin(), p.ecc.end());
    p.diameter = *std::max_element(p.ecc.begin(), p.ecc.end());
  }
  return p;
}

EccentricityProfile eccentricity_profile(const Graph& g) { return eccentricity_profile(shortest_path_lengths(g)); }

EccentricityProfile detour_profile(const DistanceTable& detour) { return eccentricity_profile(detour); }

EccentricityProfile detour_profile(const Graph& g, const DetourOptions& options) {
  return eccentricity_profile(detour_distances(g, options));
}

DistanceTable predicted_detour_table(const PartitionClasses& classes, const GroupParams& params) {
  const int K = params.rotation_order();
  const auto n = static_cast<std::size_t>(params.order());
  enum Cls { E, U, H1, H2, H3 };
  std::vector<Cls> cls(n, H1);
  cls[classes.e] = E;
  cls[classes.u] = U;
  for (Vertex v : classes.h2) cls[v] = H2;
  for (Vertex v : classes.h3) cls[v] = H3;
  std::vector<Vertex> partner(n, n);
  for (const auto& [x, y] : classes.h3_pairs) {
    partner[x] = y;
    partner[y] = x;
  }
  // Indexed [min class][max class] in E < U < H1 < H2 < H3 order.
  const int table[5][5] = {
      {0, K - 1, K + 1, 1, K + 1},
      {0, 0, K + 1, K, K + 1},
      {0, 0, K + 1, K + 2, K + 3},
      {0, 0, 0, 2, K + 2},
      {0, 0, 0, 0, K + 3},
  };
  DistanceTable d(n, std::vector<int>(n, 0));
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      const int lo = std::min(cls[a], cls[b]);
      const int hi = std::max(cls[a], cls[b]);
      d[a][b] = partner[a] == b ? K + 1 : table[lo][hi];
    }
  return d;
}

DegreeSequenceTable degree_sequences(const DistanceTable& dist) {
  DegreeSequenceTable t;
  std::map<Sequence, std::size_t> seen;
  for (Vertex v = 0; v < dist.size(); ++v) {
    const int ecc = dist[v].empty() ? 0 : *std::max_element(dist[v].begin(), dist[v].end());
    Sequence s(static_cast<std::size_t>(ecc) + 1, 0);
    for (int d : dist[v]) ++s[static_cast<std::size_t>(d)];
    const auto [it, fresh] = seen.emplace(s, t.groups.size());
    if (fresh) t.groups.push_back({s, {}});
    t.groups[it->second].vertices.push_back(v);
    t.rows.push_back(std::move(s));
  }
  return t;
}

DegreeSequenceTable dds(const Graph& g) { return degree_sequences(shortest_path_lengths(g)); }

DegreeSequenceTable dds_detour(const Graph& g, const DetourOptions& options) {
  return degree_sequences(detour_distances(g, options));
}

namespace {

// Builds a sequence from (value, repeat) runs.
Sequence runs(std::initializer_list<std::pair<std::size_t, std::size_t>> parts) {
  Sequence s;
  for (const auto& [value, times] : parts) s.insert(s.end(), times, value);
  return s;
}

}  // namespace

std::vector<PredictedSequence> predicted_dds(const GroupParams& params) {
  const auto K = static_cast<std::size_t>(params.rotation_order());
  const std::size_t h = K / 2;
  const std::size_t n = 2 * K;
  return {
      {"e", runs({{1, 1}, {n - 1, 1}}), 1},
      {"u", runs({{1, 1}, {3 * h - 1, 1}, {h, 1}}), 1},
      {"H1", runs({{1, 1}, {K - 1, 1}, {K, 1}}), K - 2},
  };
}

std::vector<PredictedSequence> predicted_dds_detour(const GroupParams& params) {
  const auto K = static_cast<std::size_t>(params.rotation_order());
  const std::size_t h = K / 2;
  return {
      {"e", runs({{1, 1}, {h, 1}, {0, K - 3}, {1, 1}, {0, 1}, {3 * h - 2, 1}}), 1},
      {"u", runs({{1, 1}, {0, K - 2}, {1, 1}, {h, 1}, {3 * h - 2, 1}}), 1},
      {"H1", runs({{1, 1}, {0, K}, {K - 1, 1}, {h, 2}}), K - 2},
      {"H2", runs({{1, 2}, {h - 1, 1}, {0, K - 3}, {1, 1}, {0, 1}, {3 * h - 2, 1}}), h},
      {"H3", runs({{1, 1}, {0, K}, {3, 1}, {h, 1}, {3 * h - 4, 1}}), h},
  };
}

bool SequenceComparison::classes_match() const {
  return std::all_of(classes.begin(), classes.end(), [](const SequenceCheck& c) { return c.match; });
}

SequenceComparison compare_sequences(const DegreeSequenceTable& table, const PartitionClasses& classes,
                                     const std::vector<PredictedSequence>& predicted) {
  const auto members = [&](const std::string& name) -> std::vector<Vertex> {
    if (name == "e") return {classes.e};
    if (name == "u") return {classes.u};
    if (name == "H1") return classes.h1;
    if (name == "H2") return classes.h2;
    if (name == "H3") return classes.h3;
    return {};
  };
  SequenceComparison out;
  for (const auto& p : predicted) {
    SequenceCheck chk{p.vertex_class, p.sequence, {}, true};
    for (Vertex v : members(p.vertex_class)) {
      const Sequence& row = table.rows.at(v);
      if (std::find(chk.computed.begin(), chk.computed.end(), row) == chk.computed.end()) chk.computed.push_back(row);
      if (row != p.sequence) chk.match = false;
    }
    out.classes.push_back(std::move(chk));
  }
  std::map<Sequence, std::size_t> want;
  std::map<Sequence, std::size_t> have;
  for (const auto& p : predicted) want[p.sequence] += p.count;
  for (const auto& g : table.groups) have[g.sequence] += g.vertices.size();
  out.multiset_match = want == have;
  return out;
}

std::string format_sequence(const Sequence& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (i > 0) os << ", ";
    os << s[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  os << ')';
  return os.str();
}

nlohmann::json to_json(const EccentricityProfile& p) {
  return {{"ecc", p.ecc}, {"radius", p.radius}, {"diameter", p.diameter}};
}

nlohmann::json to_json(const DegreeSequenceTable& t, const Graph& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (Vertex v = 0; v < t.rows.size(); ++v) rows.push_back({{"vertex", v}, {"label", g.label(v)}, {"seq", t.rows[v]}});
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& grp : t.groups)
    groups.push_back({{"seq", grp.sequence}, {"text", format_sequence(grp.sequence)}, {"count", grp.vertices.size()}});
  return {{"rows", rows}, {"groups", groups}};
}

nlohmann::json to_json(const SequenceComparison& c) {
  nlohmann::json cls = nlohmann::json::array();
  for (const auto& chk : c.classes) {
    nlohmann::json computed = nlohmann::json::array();
    for (const auto& s : chk.computed) computed.push_back(format_sequence(s));
    cls.push_back({{"class", chk.vertex_class},
                   {"predicted", format_sequence(chk.predicted)},
                   {"computed", computed},
                   {"match", chk.match}});
  }
  return {{"classes", cls}, {"multiset_match", c.multiset_match}};
}

std::string to_csv(const DegreeSequenceTable& t, const Graph& g) {
  std::size_t width = 0;
  for (const auto& r : t.rows) width = std::max(width, r.size());
  std::ostringstream os;
  os << "vertex,label";
  for (std::size_t d = 0; d < width; ++d) os << ",d" << d;
  os << '\n';
  for (Vertex v = 0; v < t.rows.size(); ++v) {
    os << v << ',' << g.label(v);
    for (std::size_t d = 0; d < width; ++d) os << ',' << (d < t.rows[v].size() ? t.rows[v][d] : 0);
    os << '\n';
  }
  return os.str();
}

}  // namespace pgspec
