#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgspec/graph.hpp"
#include "pgspec/graph_matrices.hpp"
#include "pgspec/group.hpp"
#include "pgspec/power_graph.hpp"

namespace pgspec {

struct EccentricityProfile {
  std::vector<int> ecc;
  int radius = 0;
  int diameter = 0;
};

EccentricityProfile eccentricity_profile(const DistanceTable& dist);
EccentricityProfile eccentricity_profile(const Graph& g);
/// Same extrema over detour distances.
EccentricityProfile detour_profile(const DistanceTable& detour);
EccentricityProfile detour_profile(const Graph& g, const DetourOptions& options = {});

/// Closed-form detour distances for the power graph of G(k, p), pair by
/// vertex class (H3 partners distinguished from other H3 pairs).
DistanceTable predicted_detour_table(const PartitionClasses& classes, const GroupParams& params);

/// seq[d] = number of vertices at distance d; interior zeros kept.
using Sequence = std::vector<std::size_t>;

struct SequenceGroup {
  Sequence sequence;
  std::vector<Vertex> vertices;
};

struct DegreeSequenceTable {
  std::vector<Sequence> rows;         // one per vertex
  std::vector<SequenceGroup> groups;  // distinct rows, by first occurrence
};

DegreeSequenceTable degree_sequences(const DistanceTable& dist);
DegreeSequenceTable dds(const Graph& g);
DegreeSequenceTable dds_detour(const Graph& g, const DetourOptions& options = {});

/// Closed-form sequence for one vertex class of the power graph of G(k, p).
struct PredictedSequence {
  std::string vertex_class;  // "e", "u", "H1", "H2", "H3"
  Sequence sequence;
  std::size_t count = 1;
};

/// The three printed distance shapes: e, u and H1.
std::vector<PredictedSequence> predicted_dds(const GroupParams& params);
/// The five printed detour shapes: e, u, H1, H2, H3.
std::vector<PredictedSequence> predicted_dds_detour(const GroupParams& params);

struct SequenceCheck {
  std::string vertex_class;
  Sequence predicted;
  std::vector<Sequence> computed;  // distinct rows over the class
  bool match = false;              // every class row equals predicted
};

struct SequenceComparison {
  std::vector<SequenceCheck> classes;
  /// Computed grouping equals the predicted multiset (shapes and counts).
  bool multiset_match = false;

  bool classes_match() const;
};

SequenceComparison compare_sequences(const DegreeSequenceTable& table, const PartitionClasses& classes,
                                     const std::vector<PredictedSequence>& predicted);

/// "(1, 0^9, 11, 6^2)" style with runs collapsed.
std::string format_sequence(const Sequence& s);

nlohmann::json to_json(const EccentricityProfile& p);
nlohmann::json to_json(const DegreeSequenceTable& t, const Graph& g);
nlohmann::json to_json(const SequenceComparison& c);
/// Per-vertex rows: vertex,label,d0,d1,...
std::string to_csv(const DegreeSequenceTable& t, const Graph& g);

}  // namespace pgspec
