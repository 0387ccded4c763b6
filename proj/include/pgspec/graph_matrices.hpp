#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "pgspec/graph.hpp"
#include "pgspec/matrix.hpp"

namespace pgspec {

/// Weight in [0, 1] shared by A_alpha and RD_alpha.
class AlphaParam {
 public:
  /// Throws DomainError outside [0, 1] (NaN included).
  explicit AlphaParam(double alpha);
  double value() const { return alpha_; }
  double complement() const { return 1.0 - alpha_; }

 private:
  double alpha_;
};

using DistanceTable = std::vector<std::vector<int>>;

DenseSymMatrix adjacency(const Graph& g);
DenseSymMatrix degree_diag(const Graph& g);
/// D - A (positive semidefinite sign).
DenseSymMatrix laplacian(const Graph& g);
/// D + A.
DenseSymMatrix signless_laplacian(const Graph& g);
/// alpha D + (1 - alpha) A.
DenseSymMatrix a_alpha(const Graph& g, AlphaParam alpha);

/// BFS shortest-path lengths; throws GraphError if g is disconnected.
DistanceTable shortest_path_lengths(const Graph& g);
DenseSymMatrix distance_matrix(const Graph& g);
DenseSymMatrix reciprocal_distance(const Graph& g);
DenseSymMatrix reciprocal_transmission(const Graph& g);
/// alpha RT + (1 - alpha) RD.
DenseSymMatrix rd_alpha(const Graph& g, AlphaParam alpha);

DenseSymMatrix to_matrix(const DistanceTable& table);

class DetourInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DetourOptions {
  double time_budget_s = 60.0;
  /// Cap on memoised search states per source/target pair.
  std::uint64_t max_states = 20'000'000;
};

/// Longest simple u-v path lengths, computed exactly. Vertices of a twin class
/// are interchangeable, so the search runs over per-class visit counts
/// instead of individual vertices. Throws DetourInfeasible when the budget
/// or the state cap is exceeded and GraphError when g is disconnected.
DistanceTable detour_distances(const Graph& g, const DetourOptions& options = {});
DenseSymMatrix detour_matrix(const Graph& g, const DetourOptions& options = {});

/// Longest simple s-t path for a single pair (same search as above).
int longest_path(const Graph& g, Vertex s, Vertex t, const DetourOptions& options = {});

}  // namespace pgspec
