#include "pgspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "pgspec/eigen.hpp"
#include "pgspec/power_graph.hpp"

namespace pgspec {

std::string to_string(EigenSource source) {
  switch (source) {
    case EigenSource::numeric: return "numeric";
    case EigenSource::closed_family: return "closed-family";
    case EigenSource::twin: return "twin";
    case EigenSource::quintic_root: return "quintic-root";
    case EigenSource::quotient_root: return "quotient-root";
    case EigenSource::printed_matrix: return "printed-matrix";
    case EigenSource::derived_quotient: return "derived-quotient";
    case EigenSource::block_quotient: return "block-quotient";
    case EigenSource::block_difference: return "block-difference";
  }
  return "unknown";
}

Spectrum Spectrum::from_values(std::span<const double> values, EigenSource source, double cluster_tol) {
  Spectrum s;
  for (double v : values) s.add(v, 1, source);
  return s.clustered(cluster_tol);
}

void Spectrum::add(double value, std::size_t multiplicity, EigenSource source, std::string label) {
  if (multiplicity == 0) return;
  SpectrumEntry e{value, multiplicity, source, std::move(label)};
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), value,
                              [](double v, const SpectrumEntry& x) { return v > x.value; });
  entries_.insert(pos, std::move(e));
}

void Spectrum::append(const Spectrum& other) {
  for (const auto& e : other.entries_) add(e.value, e.multiplicity, e.source, e.label);
}

std::size_t Spectrum::total() const {
  std::size_t t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  out.reserve(total());
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

Spectrum Spectrum::clustered(double tol) const {
  Spectrum out;
  std::size_t i = 0;
  while (i < entries_.size()) {
    // Merge a run whose consecutive gaps are within tol; value is the
    // multiplicity-weighted mean.
    std::size_t j = i + 1;
    double weighted = entries_[i].value * static_cast<double>(entries_[i].multiplicity);
    std::size_t mult = entries_[i].multiplicity;
    std::string label = entries_[i].label;
    while (j < entries_.size() && entries_[j - 1].value - entries_[j].value <= tol) {
      weighted += entries_[j].value * static_cast<double>(entries_[j].multiplicity);
      mult += entries_[j].multiplicity;
      if (!entries_[j].label.empty() && entries_[j].label != label) label += (label.empty() ? "" : "+") + entries_[j].label;
      ++j;
    }
    out.entries_.push_back({weighted / static_cast<double>(mult), mult, entries_[i].source, label});
    i = j;
  }
  return out;
}

double cluster_tolerance(std::span<const double> eigenvalues) {
  double norm = 1.0;
  for (double v : eigenvalues) norm = std::max(norm, std::abs(v));
  return 1e-6 * norm;
}

Spectrum numeric_spectrum(const DenseSymMatrix& m) {
  const auto values = sym_eigenvalues(m);
  return Spectrum::from_values(values, EigenSource::numeric, cluster_tolerance(values));
}

SpectrumComparison compare_spectra(const Spectrum& expected, const Spectrum& actual, double tol) {
  SpectrumComparison c;
  c.expected_total = expected.total();
  c.actual_total = actual.total();
  c.totals_match = c.expected_total == c.actual_total;
  if (!c.totals_match) return c;
  const auto a = expected.expanded();
  const auto b = actual.expanded();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    c.max_deviation = std::max(c.max_deviation, d);
    if (!(d <= tol)) c.mismatches.push_back({i, a[i], b[i]});
  }
  return c;
}

bool same_multiplicities(const Spectrum& expected, const Spectrum& actual, double cluster_tol, double value_tol) {
  const Spectrum a = expected.clustered(cluster_tol);
  const Spectrum b = actual.clustered(cluster_tol);
  if (a.entries().size() != b.entries().size()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    const auto& x = a.entries()[i];
    const auto& y = b.entries()[i];
    if (x.multiplicity != y.multiplicity || !(std::abs(x.value - y.value) <= value_tol)) return false;
  }
  return true;
}

Spectrum twin_eigenvalues(const Graph& g, AlphaParam alpha) {
  Spectrum s;
  for (const auto& c : twin_classes(g)) {
    if (c.kind == TwinKind::singleton) continue;
    const auto deg = static_cast<double>(g.degree(c.members.front()));
    const std::size_t copies = c.members.size() - 1;
    if (c.kind == TwinKind::open) {
      s.add(alpha.value() * deg, copies, EigenSource::twin, "open-twin");
    } else {
      s.add(alpha.value() * (deg + 1.0) - 1.0, copies, EigenSource::twin, "closed-twin");
    }
  }
  return s;
}

nlohmann::json to_json(const Spectrum& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : s.entries()) {
    nlohmann::json j{{"value", e.value}, {"mult", e.multiplicity}, {"source", to_string(e.source)}};
    if (!e.label.empty()) j["label"] = e.label;
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::json to_json(const SpectrumComparison& c) {
  nlohmann::json mism = nlohmann::json::array();
  for (const auto& m : c.mismatches) mism.push_back({{"index", m.index}, {"expected", m.expected}, {"actual", m.actual}});
  return {{"totals_match", c.totals_match},
          {"expected_total", c.expected_total},
          {"actual_total", c.actual_total},
          {"max_deviation", c.max_deviation},
          {"mismatches", mism},
          {"ok", c.ok()}};
}

}  // namespace pgspec
