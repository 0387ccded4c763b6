#include "pgspec/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pgspec/distance_seq.hpp"
#include "pgspec/metric.hpp"
#include "pgspec/power_graph.hpp"
#include "pgspec/report.hpp"
#include "pgspec/spectrum.hpp"

namespace pgspec {

namespace {

const std::vector<std::string> kCommands{"build", "spectra", "metric", "detour", "dds", "report"};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string alpha_tag(double a) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", a);
  return buf;
}

// Writes content to DIR/name when an output directory is set, else to out.
class Sink {
 public:
  Sink(const std::string& dir, std::ostream& out) : dir_(dir), out_(out) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  void emit(const std::string& name, const std::string& content) {
    if (dir_.empty()) {
      out_ << content;
      if (!content.empty() && content.back() != '\n') out_ << '\n';
      return;
    }
    const auto path = std::filesystem::path(dir_) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
    if (!content.empty() && content.back() != '\n') f << '\n';
    out_ << "wrote " << path.string() << '\n';
  }

 private:
  std::string dir_;
  std::ostream& out_;
};

std::string dump(const nlohmann::json& j) { return j.dump(2); }

nlohmann::json partition_json(const PartitionClasses& c, const Graph& g) {
  const auto labels = [&](const std::vector<Vertex>& vs) {
    nlohmann::json a = nlohmann::json::array();
    for (Vertex v : vs) a.push_back(g.label(v));
    return a;
  };
  return {{"H0", labels({c.e, c.u})}, {"H1", labels(c.h1)}, {"H2", labels(c.h2)}, {"H3", labels(c.h3)}};
}

void cmd_build(const GroupGraph& gg, const RunConfig& cfg, Sink& sink) {
  if (cfg.format == "text") {
    sink.emit("graph.txt", to_edge_list(gg.graph));
    return;
  }
  if (cfg.format == "csv") {
    sink.emit("adjacency.csv", to_csv(adjacency(gg.graph)));
    return;
  }
  const auto classes = classify_partition(gg.graph, gg.params);
  nlohmann::json twins = nlohmann::json::array();
  for (const auto& t : twin_classes(gg.graph)) {
    if (t.kind == TwinKind::singleton) continue;
    nlohmann::json members = nlohmann::json::array();
    for (Vertex v : t.members) members.push_back(gg.graph.label(v));
    twins.push_back({{"kind", t.kind == TwinKind::open ? "open" : "closed"}, {"members", members}});
  }
  sink.emit("graph.json", dump({{"params", {{"k", gg.params.k()}, {"p", gg.params.p()}}},
                                {"graph_kind", to_string(gg.kind)},
                                {"graph", to_json(gg.graph)},
                                {"edge_count", gg.graph.edge_count()},
                                {"partition", partition_json(classes, gg.graph)},
                                {"twin_classes", twins}}));
}

void cmd_spectra(const GroupGraph& gg, const RunConfig& cfg, Sink& sink) {
  const std::string csv = spectrum_sweep_csv(gg, cfg.alphas);
  if (cfg.format == "csv") {
    sink.emit("spectra_sweep.csv", csv);
    return;
  }
  nlohmann::json all = nlohmann::json::array();
  for (double a : cfg.alphas) {
    auto j = spectrum_report(gg, AlphaParam(a), cfg.tol);
    if (!cfg.out_dir.empty() && cfg.format == "json") {
      sink.emit("spectrum_k" + std::to_string(cfg.k) + "_p" + std::to_string(cfg.p) + "_alpha" + alpha_tag(a) + ".json",
                dump(j));
    }
    all.push_back(std::move(j));
  }
  if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& j : all) {
      os << "alpha " << j["params"]["alpha"].get<double>() << "  max deviation " << j["max_deviation"].get<double>()
         << '\n';
      for (const auto& e : j["numeric"]) os << "  " << e["value"].get<double>() << "  x" << e["mult"].get<int>() << '\n';
    }
    sink.emit("spectra.txt", os.str());
  } else if (cfg.out_dir.empty()) {
    sink.emit("", dump(all));
  } else {
    sink.emit("spectra_sweep.csv", csv);
  }
}

void cmd_metric(const GroupGraph& gg, const RunConfig& cfg, Sink& sink) {
  const auto psi = metric_dimension(gg.graph);
  const auto sdim = strong_metric_dimension(gg.graph);
  nlohmann::json sd = to_json(sdim);
  nlohmann::json j{{"psi", to_json(psi)},
                   {"sdim", {{"value", sd["value"]}, {"cover_witness", sd["cover_witness"]}}},
                   {"gsr_edges", sd["gsr_edges"]}};
  if (cfg.format == "text") {
    std::ostringstream os;
    os << "psi " << (psi.psi ? std::to_string(*psi.psi) : "?") << " (bound " << psi.lower_bound
       << (psi.certified ? ", certified" : "") << ")\n";
    os << "sdim " << sdim.value << " (G_SR edges " << sdim.resolving_graph.edge_count() << ")\n";
    sink.emit("metric.txt", os.str());
  } else {
    sink.emit("metric.json", dump(j));
  }
}

void cmd_detour(const GroupGraph& gg, const RunConfig& cfg, Sink& sink) {
  DetourOptions opt;
  opt.time_budget_s = cfg.detour_time_budget_s;
  const auto table = detour_distances(gg.graph, opt);
  const auto prof = detour_profile(table);
  if (cfg.format == "csv") {
    sink.emit("detour.csv", to_csv(to_matrix(table)));
  } else if (cfg.format == "text") {
    std::ostringstream os;
    os << "rad_D " << prof.radius << "  dia_D " << prof.diameter << '\n';
    for (Vertex v = 0; v < gg.graph.size(); ++v) os << gg.graph.label(v) << "  ec_D " << prof.ecc[v] << '\n';
    sink.emit("detour.txt", os.str());
  } else {
    sink.emit("detour.json", dump({{"profile", to_json(prof)}, {"matrix", table}, {"labels", gg.graph.labels()}}));
  }
}

void cmd_dds(const GroupGraph& gg, const RunConfig& cfg, Sink& sink) {
  DetourOptions opt;
  opt.time_budget_s = cfg.detour_time_budget_s;
  const auto classes = classify_partition(gg.graph, gg.params);
  const auto plain = dds(gg.graph);
  const auto detour = dds_detour(gg.graph, opt);
  if (cfg.format == "csv") {
    sink.emit("dds.csv", to_csv(plain, gg.graph));
    sink.emit("dds_detour.csv", to_csv(detour, gg.graph));
    return;
  }
  if (cfg.format == "text") {
    std::ostringstream os;
    const auto table = [&](const char* title, const DegreeSequenceTable& t) {
      os << title << '\n';
      for (const auto& g : t.groups) os << "  " << std::setw(4) << g.vertices.size() << "  " << format_sequence(g.sequence) << '\n';
    };
    table("dds", plain);
    table("dds_D", detour);
    sink.emit("dds.txt", os.str());
    return;
  }
  sink.emit("dds.json",
            dump({{"dds", to_json(plain, gg.graph)},
                  {"dds_detour", to_json(detour, gg.graph)},
                  {"dds_comparison", to_json(compare_sequences(plain, classes, predicted_dds(gg.params)))},
                  {"dds_detour_comparison", to_json(compare_sequences(detour, classes, predicted_dds_detour(gg.params)))}}));
}

int cmd_report(const GroupParams& params, const RunConfig& cfg, Sink& sink) {
  ReportOptions opt;
  opt.alphas = cfg.alphas;
  opt.kind = parse_graph_kind(cfg.graph);
  opt.tol = cfg.tol;
  opt.seed = cfg.seed;
  opt.detour.time_budget_s = cfg.detour_time_budget_s;
  const Report r = verify(params, opt);
  if (cfg.format == "text")
    sink.emit("report.txt", r.to_text());
  else
    sink.emit("report.json", dump(r.to_json()));
  return r.ok() ? exit_ok : exit_mismatch;
}

void validate(const RunConfig& cfg) {
  if (cfg.commands.empty()) throw UsageError("no command given (expected one of build, spectra, metric, detour, dds, report)");
  for (const auto& c : cfg.commands)
    if (std::find(kCommands.begin(), kCommands.end(), c) == kCommands.end()) throw UsageError("unknown command '" + c + "'");
  for (double a : cfg.alphas)
    if (!(a >= 0.0 && a <= 1.0)) throw UsageError("alpha must lie in [0, 1] (got " + std::to_string(a) + ")");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
    throw UsageError("format must be json, csv or text");
  if (!(cfg.detour_time_budget_s > 0.0)) throw UsageError("detour budget must be positive");
  if (!(cfg.tol > 0.0)) throw UsageError("tol must be positive");
  try {
    parse_graph_kind(cfg.graph);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run(const RunConfig& input, std::ostream& out, std::ostream& err) {
  RunConfig cfg = input;
  if (cfg.alphas.empty()) cfg.alphas = {0.5};
  std::optional<GroupParams> params;
  try {
    validate(cfg);
    params = GroupParams::make(cfg.k, cfg.p);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }
  int status = exit_ok;
  try {
    Sink sink(cfg.out_dir, out);
    const GroupGraph gg = build_group_graph(*params, parse_graph_kind(cfg.graph));
    for (const auto& c : cfg.commands) {
      if (c == "build") cmd_build(gg, cfg, sink);
      if (c == "spectra") cmd_spectra(gg, cfg, sink);
      if (c == "metric") cmd_metric(gg, cfg, sink);
      if (c == "detour") cmd_detour(gg, cfg, sink);
      if (c == "dds") cmd_dds(gg, cfg, sink);
      if (c == "report") status = std::max(status, cmd_report(*params, cfg, sink));
    }
  } catch (const DetourInfeasible& e) {
    err << "detour oracle infeasible: " << e.what() << '\n';
    return exit_mismatch;
  }
  if (status == exit_mismatch) err << "verification mismatch: see report\n";
  return status;
}

namespace {

int run_ingest(const std::string& path, const std::string& input_format, bool analyze, const std::string& format,
               const std::string& out_dir, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open " + path);
    std::string fmt = input_format;
    if (fmt.empty()) fmt = path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? "json" : "edge-list";
    if (fmt == "json") {
      g = graph_from_json(nlohmann::json::parse(f));
    } else if (fmt == "edge-list") {
      g = parse_edge_list(f);
    } else {
      throw UsageError("input format must be edge-list or json");
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  }

  Sink sink(out_dir, out);
  if (format == "text") {
    sink.emit("graph.txt", to_edge_list(g));
    return exit_ok;
  }
  nlohmann::json j{{"graph", to_json(g)}, {"edge_count", g.edge_count()}, {"connected", g.connected()}};
  if (analyze && g.connected() && g.size() > 0) {
    j["eccentricity"] = to_json(eccentricity_profile(g));
    j["adjacency_spectrum"] = to_json(numeric_spectrum(adjacency(g)));
    if (g.size() <= 64) j["sdim"] = strong_metric_dimension(g).value;
    try {
      j["psi"] = to_json(metric_dimension(g));
    } catch (const SearchLimitError& e) {
      j["psi"] = {{"error", e.what()}};
    }
  }
  sink.emit("graph.json", dump(j));
  return exit_ok;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Fills options not already set on the command line or by environment.
void apply_config(CLI::App& cmd, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open config file " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '[' && value.back() == ']') value = value.substr(1, value.size() - 2);
    CLI::Option* opt = cmd.get_option_no_throw("--" + key);
    if (opt == nullptr) {
      std::replace(key.begin(), key.end(), '_', '-');
      opt = cmd.get_option_no_throw("--" + key);
    }
    if (opt == nullptr || key == "config")
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (opt->count() > 0) continue;
    const std::string env = opt->get_envname();
    if (!env.empty() && std::getenv(env.c_str()) != nullptr) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power graphs of G(k, p): construction, spectra and invariant checks", "pgspec"};
  app.set_version_flag("--version", library_version());
  app.require_subcommand(1);

  RunConfig cfg;
  auto* run_cmd = app.add_subcommand("run", "build the graph and run commands");
  std::string config_path;
  run_cmd->add_option("--config", config_path, "key=value file mirroring the long flags")->envname("PGSPEC_CONFIG");
  run_cmd->add_option("--k", cfg.k, "exponent k >= 2")->envname("PGSPEC_K");
  run_cmd->add_option("--p", cfg.p, "odd prime p")->envname("PGSPEC_P");
  run_cmd->add_option("--alpha", cfg.alphas, "alpha in [0, 1], repeatable")
      ->envname("PGSPEC_ALPHA")
      ->delimiter(',')
      ->allow_extra_args(false);
  run_cmd->add_option("--format", cfg.format, "json, csv or text")->envname("PGSPEC_FORMAT");
  run_cmd->add_option("--out", cfg.out_dir, "output directory (default: stdout)")->envname("PGSPEC_OUT");
  run_cmd->add_option("--detour-budget,--detour_time_budget_s", cfg.detour_time_budget_s, "detour time budget in seconds")
      ->envname("PGSPEC_DETOUR_BUDGET");
  run_cmd->add_option("--tol", cfg.tol, "spectrum comparison tolerance")->envname("PGSPEC_TOL");
  run_cmd->add_option("--seed", cfg.seed, "seed for randomized checks")->envname("PGSPEC_SEED");
  run_cmd->add_option("--graph", cfg.graph, "power or enhanced")->envname("PGSPEC_GRAPH");
  run_cmd->add_option("commands", cfg.commands, "build, spectra, metric, detour, dds, report");

  std::string path;
  std::string input_format;
  std::string ingest_format = "json";
  std::string ingest_out;
  bool analyze = false;
  auto* ingest_cmd = app.add_subcommand("ingest", "read a graph from an edge list or JSON file");
  ingest_cmd->add_option("path", path, "input file")->required();
  ingest_cmd->add_option("--input-format", input_format, "edge-list or json (default: by extension)");
  ingest_cmd->add_option("--format", ingest_format, "json or text");
  ingest_cmd->add_option("--out", ingest_out, "output directory (default: stdout)");
  ingest_cmd->add_flag("--analyze", analyze, "also compute eccentricities, spectrum, psi and sdim");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  if (!config_path.empty()) {
    try {
      apply_config(*run_cmd, config_path);
    } catch (const std::exception& e) {
      err << "usage error: " << e.what() << '\n';
      return exit_usage;
    }
  }
  if (*ingest_cmd) return run_ingest(path, input_format, analyze, ingest_format, ingest_out, out, err);
  return run(cfg, out, err);
}

}  // namespace pgspec
