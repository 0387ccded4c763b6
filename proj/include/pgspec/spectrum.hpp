#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgspec/graph.hpp"
#include "pgspec/graph_matrices.hpp"
#include "pgspec/matrix.hpp"

namespace pgspec {

enum class EigenSource {
  numeric,
  closed_family,
  twin,
  quintic_root,     // root of the transcribed quintic
  quotient_root,    // eigenvalue of the 5x5 A_alpha class quotient
  printed_matrix,   // eigenvalue of the transcribed RD_alpha matrix X
  derived_quotient, // eigenvalue of the 5x5 RD_alpha class quotient
  block_quotient,   // Spec(N) of a block reduction
  block_difference  // Spec(X - W) of a block reduction
};

std::string to_string(EigenSource source);

struct SpectrumEntry {
  double value = 0.0;
  std::size_t multiplicity = 1;
  EigenSource source = EigenSource::numeric;
  std::string label;
};

/// Multiset of eigenvalues, kept sorted by descending value.
class Spectrum {
 public:
  Spectrum() = default;

  /// Clusters values closer than cluster_tol into one entry.
  static Spectrum from_values(std::span<const double> values, EigenSource source, double cluster_tol);

  void add(double value, std::size_t multiplicity, EigenSource source, std::string label = {});
  void append(const Spectrum& other);

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  std::size_t total() const;
  /// Every value repeated by its multiplicity, descending.
  std::vector<double> expanded() const;
  /// Adjacent entries within tol merged; labels joined with '+'.
  Spectrum clustered(double tol) const;

 private:
  std::vector<SpectrumEntry> entries_;
};

/// Clustering tolerance for numeric spectra: 1e-6 * max(1, ||M||_2).
double cluster_tolerance(std::span<const double> eigenvalues);

Spectrum numeric_spectrum(const DenseSymMatrix& m);

struct SpectrumMismatch {
  std::size_t index = 0;
  double expected = 0.0;
  double actual = 0.0;
};

struct SpectrumComparison {
  bool totals_match = false;
  std::size_t expected_total = 0;
  std::size_t actual_total = 0;
  double max_deviation = 0.0;
  std::vector<SpectrumMismatch> mismatches;  // beyond tol

  bool ok() const { return totals_match && mismatches.empty(); }
};

/// Pairs the sorted expansions index by index (optimal for 1-D matching).
SpectrumComparison compare_spectra(const Spectrum& expected, const Spectrum& actual, double tol);

/// True when both spectra cluster (at cluster_tol) into the same values
/// (within value_tol) with identical multiplicities.
bool same_multiplicities(const Spectrum& expected, const Spectrum& actual, double cluster_tol, double value_tol);

/// Eigenvalues forced by twin classes of size l + 1: alpha deg (open) or
/// alpha (deg + 1) - 1 (closed), each with multiplicity l.
Spectrum twin_eigenvalues(const Graph& g, AlphaParam alpha);

nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const SpectrumComparison& c);

}  // namespace pgspec
