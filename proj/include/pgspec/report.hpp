#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgspec/graph_matrices.hpp"
#include "pgspec/group.hpp"
#include "pgspec/power_graph.hpp"

namespace pgspec {

std::string library_version();

enum class ClaimStatus { pass, fail, diagnostic, not_verified };

std::string to_string(ClaimStatus status);

struct Claim {
  std::string id;
  std::string title;
  ClaimStatus status = ClaimStatus::fail;
  nlohmann::json details;
};

struct ReportOptions {
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 1.0};
  GraphKind kind = GraphKind::power;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  DetourOptions detour;
  /// Detour oracle runs only up to this group order; larger orders report
  /// the closed-form prediction as not verified.
  std::size_t detour_max_order = 24;
  std::size_t block_cases = 100;
  double block_tol = 1e-9;
};

struct Report {
  GroupParams params;
  ReportOptions options;
  std::vector<Claim> claims;

  bool ok() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

// Individual checks; each returns one claim.
Claim check_decomposition(const GroupGraph& gg);
Claim check_degree_table(const GroupGraph& gg);
Claim check_twin_eigenvalues(const GroupGraph& gg, const std::vector<double>& alphas, double tol);
Claim check_a_alpha_spectrum(const GroupGraph& gg, const std::vector<double>& alphas, double tol);
Claim check_quintic(const GroupParams& params, const std::vector<double>& alphas);
Claim check_block_reduction(std::uint64_t seed, std::size_t cases, double tol);
Claim check_rd_alpha_spectrum(const GroupGraph& gg, const std::vector<double>& alphas, double tol);
Claim check_detour(const GroupGraph& gg, const DistanceTable* detour);
Claim check_metric_dimension(const GroupGraph& gg);
Claim check_strong_metric_dimension(const GroupGraph& gg);
Claim check_dds(const GroupGraph& gg);
Claim check_dds_detour(const GroupGraph& gg, const DistanceTable* detour);

/// Runs every check. The detour table is computed once and shared.
Report verify(const GroupParams& params, const ReportOptions& options);

/// Closed-form and numeric spectra of A_alpha and RD_alpha at one alpha.
nlohmann::json spectrum_report(const GroupGraph& gg, AlphaParam alpha, double tol);
/// alpha,matrix,rank,numeric,predicted,abs_dev rows over all alphas.
std::string spectrum_sweep_csv(const GroupGraph& gg, const std::vector<double>& alphas);

}  // namespace pgspec
