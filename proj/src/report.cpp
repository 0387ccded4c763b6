#include "pgspec/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "pgspec/block_form.hpp"
#include "pgspec/closed_forms.hpp"
#include "pgspec/distance_seq.hpp"
#include "pgspec/eigen.hpp"
#include "pgspec/metric.hpp"
#include "pgspec/spectrum.hpp"

namespace pgspec {

std::string library_version() { return PGSPEC_VERSION; }

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::diagnostic: return "DIAGNOSTIC";
    case ClaimStatus::not_verified: return "NOT-VERIFIED";
  }
  return "FAIL";
}

namespace {

ClaimStatus verdict(bool ok) { return ok ? ClaimStatus::pass : ClaimStatus::fail; }

Spectrum raw_spectrum(const std::vector<double>& values) {
  Spectrum s;
  for (double v : values) s.add(v, 1, EigenSource::numeric);
  return s;
}

nlohmann::json edges_json(const std::vector<Edge>& edges, std::size_t limit) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < edges.size() && i < limit; ++i) out.push_back({edges[i].first, edges[i].second});
  return out;
}

nlohmann::json decomposition_json(const DecompositionReport& r) {
  return {{"ok", r.ok},
          {"expected_edges", r.expected_edges},
          {"actual_edges", r.actual_edges},
          {"missing_count", r.missing.size()},
          {"extra_count", r.extra.size()},
          {"missing", edges_json(r.missing, 20)},
          {"extra", edges_json(r.extra, 20)}};
}

// Every clustered entry of `want` is matched by a numeric cluster of at
// least the same multiplicity.
bool contains_multiset(const Spectrum& numeric, const Spectrum& want, double tol) {
  for (const auto& w : want.entries()) {
    const bool found = std::any_of(numeric.entries().begin(), numeric.entries().end(), [&](const SpectrumEntry& e) {
      return std::abs(e.value - w.value) <= tol && e.multiplicity >= w.multiplicity;
    });
    if (!found) return false;
  }
  return true;
}

struct AlphaSpectrumCheck {
  nlohmann::json details;
  bool values_ok = false;
  bool multiplicities_ok = false;
  double max_deviation = 0.0;
};

AlphaSpectrumCheck compare_closed_form(const Spectrum& predicted, const std::vector<double>& numeric, double tol) {
  AlphaSpectrumCheck c;
  const Spectrum raw = raw_spectrum(numeric);
  const double ctol = cluster_tolerance(numeric);
  const auto cmp = compare_spectra(predicted, raw, tol);
  c.values_ok = cmp.ok();
  c.max_deviation = cmp.max_deviation;
  c.multiplicities_ok = same_multiplicities(predicted, raw, ctol, ctol);
  c.details = {{"predicted", to_json(predicted.clustered(ctol))},
               {"numeric", to_json(raw.clustered(ctol))},
               {"comparison", to_json(cmp)},
               {"multiplicities_ok", c.multiplicities_ok}};
  return c;
}

std::map<std::string, std::vector<Vertex>> class_members(const PartitionClasses& classes) {
  return {{"e", {classes.e}}, {"u", {classes.u}}, {"H1", classes.h1}, {"H2", classes.h2}, {"H3", classes.h3}};
}

}  // namespace

bool Report::ok() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::fail; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json claims_json = nlohmann::json::array();
  std::map<std::string, std::size_t> tally{{"PASS", 0}, {"FAIL", 0}, {"DIAGNOSTIC", 0}, {"NOT-VERIFIED", 0}};
  for (const auto& c : claims) {
    claims_json.push_back({{"id", c.id}, {"title", c.title}, {"status", to_string(c.status)}, {"details", c.details}});
    ++tally[to_string(c.status)];
  }
  return {{"tool", "pgspec"},
          {"version", library_version()},
          {"config",
           {{"k", params.k()},
            {"p", params.p()},
            {"alphas", options.alphas},
            {"graph", to_string(options.kind)},
            {"tol", options.tol},
            {"seed", options.seed},
            {"detour_time_budget_s", options.detour.time_budget_s}}},
          {"claims", claims_json},
          {"summary",
           {{"pass", tally["PASS"]},
            {"fail", tally["FAIL"]},
            {"diagnostic", tally["DIAGNOSTIC"]},
            {"not_verified", tally["NOT-VERIFIED"]},
            {"ok", ok()}}}};
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "pgspec " << library_version() << "  k=" << params.k() << " p=" << params.p() << " graph="
     << to_string(options.kind) << '\n';
  for (const auto& c : claims)
    os << std::left << std::setw(13) << to_string(c.status) << std::setw(26) << c.id << c.title << '\n';
  os << (ok() ? "all claims hold" : "some claims fail") << '\n';
  return os.str();
}

Claim check_decomposition(const GroupGraph& gg) {
  const auto classes = classify_partition(gg.graph, gg.params);
  const auto clique = verify_decomposition(gg.graph, classes, gg.params, RotationPiece::clique);
  const auto cyclic = verify_decomposition(gg.graph, classes, gg.params, RotationPiece::cyclic_power_graph);
  return {"decomposition",
          "edge-union of the rotation clique, pendant H2 edges and H3 quadruples",
          verdict(clique.ok),
          {{"clique_reading", decomposition_json(clique)}, {"cyclic_power_graph_reading", decomposition_json(cyclic)}}};
}

Claim check_degree_table(const GroupGraph& gg) {
  const auto want = predicted_degree_multiset(gg.params);
  const auto have = degree_multiset(gg.graph);
  nlohmann::json w = nlohmann::json::object();
  nlohmann::json h = nlohmann::json::object();
  for (const auto& [d, m] : want) w[std::to_string(d)] = m;
  for (const auto& [d, m] : have) h[std::to_string(d)] = m;
  return {"degree-table", "degree multiset by vertex class", verdict(want == have), {{"predicted", w}, {"computed", h}}};
}

Claim check_twin_eigenvalues(const GroupGraph& gg, const std::vector<double>& alphas, double tol) {
  bool ok = true;
  nlohmann::json per = nlohmann::json::array();
  for (double a : alphas) {
    const AlphaParam alpha(a);
    const auto values = sym_eigenvalues(a_alpha(gg.graph, alpha));
    const double ctol = cluster_tolerance(values);
    const Spectrum numeric = raw_spectrum(values).clustered(ctol);
    const Spectrum twins = twin_eigenvalues(gg.graph, alpha).clustered(ctol);
    const bool hit = contains_multiset(numeric, twins, std::max(tol, ctol));
    ok = ok && hit;
    per.push_back({{"alpha", a}, {"twin_eigenvalues", to_json(twins)}, {"contained", hit}});
  }
  return {"twin-eigenvalues", "twin classes force A_alpha eigenvalues", verdict(ok), {{"alphas", per}}};
}

Claim check_a_alpha_spectrum(const GroupGraph& gg, const std::vector<double>& alphas, double tol) {
  bool ok = true;
  double worst = 0.0;
  nlohmann::json per = nlohmann::json::array();
  for (double a : alphas) {
    const AlphaParam alpha(a);
    const auto cf = a_alpha_closed_form(gg.params, alpha);
    const auto c = compare_closed_form(cf.predicted(), sym_eigenvalues(a_alpha(gg.graph, alpha)), tol);
    ok = ok && c.values_ok && c.multiplicities_ok;
    worst = std::max(worst, c.max_deviation);
    nlohmann::json d = c.details;
    d["alpha"] = a;
    d["quotient_roots"] = cf.quotient_roots;
    per.push_back(std::move(d));
  }
  return {"a-alpha-spectrum",
          "A_alpha spectrum: four families plus five quotient eigenvalues",
          verdict(ok),
          {{"max_deviation", worst}, {"alphas", per}}};
}

Claim check_quintic(const GroupParams& params, const std::vector<double>& alphas) {
  bool ok = true;
  nlohmann::json per = nlohmann::json::array();
  std::vector<double> mismatched;
  for (double a : alphas) {
    const AlphaParam alpha(a);
    const auto cf = a_alpha_closed_form(params, alpha);
    const auto coeffs = QuinticCoeffs::printed(params, alpha);
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& z : cf.quintic_roots) roots.push_back({z.real(), z.imag()});
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& q : cf.quintic_checks)
      checks.push_back({{"x", q.x}, {"residual", q.residual}, {"scale", q.scale}, {"ok", q.ok}});
    const bool good = cf.quintic_consistent();
    if (!good) mismatched.push_back(a);
    ok = ok && good;
    per.push_back({{"alpha", a},
                   {"coefficients", coeffs.c},
                   {"quintic_roots", roots},
                   {"quotient_roots", cf.quotient_roots},
                   {"max_route_gap", cf.max_route_gap},
                   {"checks", checks},
                   {"consistent", good}});
  }
  nlohmann::json details{{"alphas", per}};
  if (!ok) {
    details["diagnostic"] = "coefficient-mismatch";
    details["mismatched_alphas"] = mismatched;
  }
  return {"quintic", "transcribed quintic vanishes at the quotient eigenvalues",
          ok ? ClaimStatus::pass : ClaimStatus::diagnostic, details};
}

Claim check_block_reduction(std::uint64_t seed, std::size_t cases, double tol) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    const BlockForm f = random_block_form(rng);
    const auto direct = raw_spectrum(sym_eigenvalues(f.assemble()));
    const auto cmp = compare_spectra(block_reduce(f), direct, tol);
    worst = std::max(worst, cmp.max_deviation);
    if (!cmp.ok()) ++failures;
  }
  return {"block-reduction",
          "Spec(N) with Spec(X - W)^(c-1) equals the assembled spectrum",
          verdict(failures == 0),
          {{"cases", cases}, {"seed", seed}, {"tol", tol}, {"max_deviation", worst}, {"failures", failures}}};
}

Claim check_rd_alpha_spectrum(const GroupGraph& gg, const std::vector<double>& alphas, double tol) {
  bool ok = true;
  double worst = 0.0;
  nlohmann::json per = nlohmann::json::array();
  for (double a : alphas) {
    const AlphaParam alpha(a);
    const auto cf = rd_alpha_closed_form(gg.params, alpha);
    const auto numeric = sym_eigenvalues(rd_alpha(gg.graph, alpha));
    const auto printed = compare_closed_form(cf.predicted(), numeric, tol);
    const auto derived = compare_closed_form(cf.predicted_derived(), numeric, tol);
    bool step = printed.values_ok && printed.multiplicities_ok;
    nlohmann::json d = printed.details;
    d["alpha"] = a;
    d["printed_roots"] = cf.printed_roots;
    d["derived_roots"] = cf.derived_roots;
    d["derived_comparison"] = derived.details["comparison"];
    if (a == 1.0) {
      auto rt = reciprocal_transmission(gg.graph).diagonal_values();
      std::sort(rt.begin(), rt.end(), std::greater<>());
      const bool exact = rt == numeric;
      d["rt_diagonal_exact"] = exact;
      step = step && exact;
    }
    ok = ok && step;
    worst = std::max(worst, printed.max_deviation);
    per.push_back(std::move(d));
  }
  return {"rd-alpha-spectrum",
          "RD_alpha spectrum: five families plus eigenvalues of the printed matrix X",
          verdict(ok),
          {{"max_deviation", worst}, {"alphas", per}}};
}

Claim check_detour(const GroupGraph& gg, const DistanceTable* detour) {
  const auto classes = classify_partition(gg.graph, gg.params);
  const int K = gg.params.rotation_order();
  const nlohmann::json predicted_ecc{{"e", K + 1}, {"u", K + 1}, {"H1", K + 3}, {"H2", K + 2}, {"H3", K + 3}};
  nlohmann::json predicted{{"ecc", predicted_ecc}, {"radius", K + 1}, {"diameter", K + 3}};
  if (detour == nullptr)
    return {"detour", "detour distances, eccentricities, radius and diameter", ClaimStatus::not_verified,
            {{"predicted", predicted}, {"note", "group order above the detour oracle limit"}}};

  const auto expected = predicted_detour_table(classes, gg.params);
  std::size_t mismatches = 0;
  nlohmann::json samples = nlohmann::json::array();
  for (Vertex a = 0; a < expected.size(); ++a)
    for (Vertex b = a + 1; b < expected.size(); ++b)
      if ((*detour)[a][b] != expected[a][b]) {
        if (samples.size() < 20)
          samples.push_back({{"pair", {gg.graph.label(a), gg.graph.label(b)}},
                             {"predicted", expected[a][b]},
                             {"computed", (*detour)[a][b]}});
        ++mismatches;
      }
  const auto prof = detour_profile(*detour);
  nlohmann::json computed_ecc = nlohmann::json::object();
  bool ecc_ok = true;
  for (const auto& [name, members] : class_members(classes)) {
    std::set<int> vals;
    for (Vertex v : members) vals.insert(prof.ecc[v]);
    computed_ecc[name] = vals;
    ecc_ok = ecc_ok && vals.size() == 1 && *vals.begin() == predicted_ecc[name].get<int>();
  }
  const bool ok = mismatches == 0 && ecc_ok && prof.radius == K + 1 && prof.diameter == K + 3;
  return {"detour",
          "detour distances, eccentricities, radius and diameter",
          verdict(ok),
          {{"predicted", predicted},
           {"computed", {{"ecc", computed_ecc}, {"radius", prof.radius}, {"diameter", prof.diameter}}},
           {"pair_mismatches", mismatches},
           {"mismatch_samples", samples}}};
}

Claim check_metric_dimension(const GroupGraph& gg) {
  const auto rep = metric_dimension(gg.graph);
  const std::size_t expected = 7 * static_cast<std::size_t>(gg.params.quarter()) - 4;
  const auto witness = family_resolving_witness(gg.graph, gg.params);
  const bool witness_resolves = resolve_check(gg.graph, witness);
  const bool ok = rep.certified && rep.psi && *rep.psi == expected && witness_resolves && witness.size() == expected &&
                  rep.lower_bound == expected;
  return {"metric-dimension",
          "metric dimension 7 * 2^(k-2) p - 4",
          verdict(ok),
          {{"expected", expected},
           {"psi", to_json(rep)},
           {"family_witness", {{"size", witness.size()}, {"resolves", witness_resolves}}}}};
}

Claim check_strong_metric_dimension(const GroupGraph& gg) {
  const auto s = strong_metric_dimension(gg.graph);
  const auto expected = static_cast<std::size_t>(gg.params.order()) - 3;
  return {"strong-metric-dimension",
          "strong metric dimension 2^(k+1) p - 3",
          verdict(s.value == expected),
          {{"expected", expected},
           {"sdim", {{"value", s.value}, {"cover_witness", s.cover.witness}}},
           {"gsr_edge_count", s.resolving_graph.edge_count()}}};
}

Claim check_dds(const GroupGraph& gg) {
  const auto classes = classify_partition(gg.graph, gg.params);
  const auto cmp = compare_sequences(dds(gg.graph), classes, predicted_dds(gg.params));
  const auto table = dds(gg.graph);
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : table.groups) groups.push_back({{"seq", format_sequence(g.sequence)}, {"count", g.vertices.size()}});
  return {"dds",
          "distance degree sequences of e, u and H1",
          verdict(cmp.classes_match()),
          {{"comparison", to_json(cmp)}, {"computed_groups", groups}}};
}

Claim check_dds_detour(const GroupGraph& gg, const DistanceTable* detour) {
  if (detour == nullptr)
    return {"dds-detour", "detour degree sequences of all five classes", ClaimStatus::not_verified,
            {{"note", "group order above the detour oracle limit"}}};
  const auto classes = classify_partition(gg.graph, gg.params);
  const auto table = degree_sequences(*detour);
  const auto cmp = compare_sequences(table, classes, predicted_dds_detour(gg.params));
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : table.groups) groups.push_back({{"seq", format_sequence(g.sequence)}, {"count", g.vertices.size()}});
  return {"dds-detour",
          "detour degree sequences of all five classes",
          verdict(cmp.classes_match()),
          {{"comparison", to_json(cmp)}, {"computed_groups", groups}}};
}

Report verify(const GroupParams& params, const ReportOptions& options) {
  Report r{params, options, {}};
  const GroupGraph gg = build_group_graph(params, options.kind);
  std::optional<DistanceTable> detour;
  std::string detour_error;
  if (static_cast<std::size_t>(params.order()) <= options.detour_max_order) {
    try {
      detour = detour_distances(gg.graph, options.detour);
    } catch (const DetourInfeasible& e) {
      detour_error = e.what();
    }
  }
  const DistanceTable* dptr = detour ? &*detour : nullptr;

  r.claims.push_back(check_decomposition(gg));
  r.claims.push_back(check_degree_table(gg));
  r.claims.push_back(check_twin_eigenvalues(gg, options.alphas, options.tol));
  r.claims.push_back(check_a_alpha_spectrum(gg, options.alphas, options.tol));
  r.claims.push_back(check_quintic(params, options.alphas));
  r.claims.push_back(check_block_reduction(options.seed, options.block_cases, options.block_tol));
  r.claims.push_back(check_rd_alpha_spectrum(gg, options.alphas, options.tol));
  if (!detour_error.empty()) {
    r.claims.push_back({"detour", "detour distances, eccentricities, radius and diameter", ClaimStatus::fail,
                        {{"error", detour_error}}});
    r.claims.push_back({"dds-detour", "detour degree sequences of all five classes", ClaimStatus::fail,
                        {{"error", detour_error}}});
  } else {
    r.claims.push_back(check_detour(gg, dptr));
  }
  r.claims.push_back(check_metric_dimension(gg));
  r.claims.push_back(check_strong_metric_dimension(gg));
  r.claims.push_back(check_dds(gg));
  if (detour_error.empty()) r.claims.push_back(check_dds_detour(gg, dptr));
  return r;
}

nlohmann::json spectrum_report(const GroupGraph& gg, AlphaParam alpha, double tol) {
  const auto acf = a_alpha_closed_form(gg.params, alpha);
  const auto a_num = sym_eigenvalues(a_alpha(gg.graph, alpha));
  const auto a_cmp = compare_closed_form(acf.predicted(), a_num, tol);
  nlohmann::json quintic_roots = nlohmann::json::array();
  for (const auto& z : acf.quintic_roots) quintic_roots.push_back({z.real(), z.imag()});

  const auto rcf = rd_alpha_closed_form(gg.params, alpha);
  const auto r_num = sym_eigenvalues(rd_alpha(gg.graph, alpha));
  const auto r_cmp = compare_closed_form(rcf.predicted(), r_num, tol);
  const auto r_der = compare_closed_form(rcf.predicted_derived(), r_num, tol);

  return {{"params", {{"k", gg.params.k()}, {"p", gg.params.p()}, {"alpha", alpha.value()}}},
          {"graph", to_string(gg.kind)},
          {"families", to_json(acf.families)},
          {"numeric", a_cmp.details["numeric"]},
          {"max_deviation", a_cmp.max_deviation},
          {"a_alpha",
           {{"families", to_json(acf.families)},
            {"quotient_roots", acf.quotient_roots},
            {"quintic_roots", quintic_roots},
            {"quintic_consistent", acf.quintic_consistent()},
            {"comparison", a_cmp.details}}},
          {"rd_alpha",
           {{"families", to_json(rcf.families)},
            {"printed_roots", rcf.printed_roots},
            {"derived_roots", rcf.derived_roots},
            {"comparison", r_cmp.details},
            {"derived_comparison", r_der.details}}}};
}

std::string spectrum_sweep_csv(const GroupGraph& gg, const std::vector<double>& alphas) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "alpha,matrix,rank,numeric,predicted,abs_dev\n";
  for (double a : alphas) {
    const AlphaParam alpha(a);
    const auto emit = [&](const char* name, const Spectrum& predicted, const std::vector<double>& numeric) {
      const auto pred = predicted.expanded();
      for (std::size_t i = 0; i < numeric.size(); ++i) {
        const double pv = i < pred.size() ? pred[i] : std::nan("");
        os << a << ',' << name << ',' << i << ',' << numeric[i] << ',' << pv << ',' << std::abs(pv - numeric[i])
           << '\n';
      }
    };
    emit("A_alpha", a_alpha_closed_form(gg.params, alpha).predicted(), sym_eigenvalues(a_alpha(gg.graph, alpha)));
    emit("RD_alpha", rd_alpha_closed_form(gg.params, alpha).predicted(), sym_eigenvalues(rd_alpha(gg.graph, alpha)));
  }
  return os.str();
}

}  // namespace pgspec
