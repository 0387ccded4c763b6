#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pgspec/cli.hpp"
#include "pgspec/graph.hpp"

using namespace pgspec;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("pgspec_test_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("usage errors") {
  auto r = cli({"run", "--k", "2", "--p", "4", "report"});
  CHECK(r.code == exit_usage);
  CHECK(r.err.find("p must be an odd prime") != std::string::npos);
  CHECK(cli({"run", "--k", "1", "--p", "3", "build"}).code == exit_usage);
  CHECK(cli({"run", "--k", "2", "--p", "3", "--alpha", "1.5", "spectra"}).code == exit_usage);
  CHECK(cli({"run", "--k", "2", "--p", "3", "bogus"}).code == exit_usage);
  CHECK(cli({"run", "--k", "2", "--p", "3", "--format", "xml", "build"}).code == exit_usage);
  CHECK(cli({"run", "--k", "2", "--p", "3", "--graph", "directed", "build"}).code == exit_usage);
  CHECK(cli({"run", "--frobnicate"}).code == exit_usage);
  CHECK(cli({"ingest"}).code == exit_usage);
}

TEST_CASE("help exits cleanly") {
  const auto r = cli({"--help"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("run") != std::string::npos);
}

TEST_CASE("build to stdout") {
  const auto r = cli({"run", "--k", "2", "--p", "3", "build"});
  CHECK(r.code == exit_ok);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.is_object());
}

TEST_CASE("spectra sweep writes one file per alpha") {
  const auto dir = scratch("spectra");
  const auto r = cli({"run", "--k", "3", "--p", "3", "--alpha", "0", "--alpha", "1", "--out", dir.string(), "spectra"});
  CHECK(r.code == exit_ok);
  CHECK(fs::exists(dir / "spectrum_k3_p3_alpha0.json"));
  CHECK(fs::exists(dir / "spectrum_k3_p3_alpha1.json"));
  CHECK(fs::exists(dir / "spectra_sweep.csv"));
  const auto j = nlohmann::json::parse(slurp(dir / "spectrum_k3_p3_alpha1.json"));
  CHECK(j["params"]["k"] == 3);
  CHECK(j["params"]["alpha"] == 1.0);
  CHECK(j["numeric"].size() > 0);
  CHECK(j.contains("max_deviation"));
  CHECK(j.contains("families"));
}

TEST_CASE("comma separated alphas") {
  const auto dir = scratch("comma");
  CHECK(cli({"run", "--k", "2", "--p", "3", "--alpha", "0.25,0.75", "--out", dir.string(), "spectra"}).code == exit_ok);
  CHECK(fs::exists(dir / "spectrum_k2_p3_alpha0.25.json"));
  CHECK(fs::exists(dir / "spectrum_k2_p3_alpha0.75.json"));
}

TEST_CASE("report exit codes follow the verdicts") {
  const auto pow = cli({"run", "--k", "2", "--p", "3", "--alpha", "0.5", "report"});
  CHECK(pow.code == exit_mismatch);
  const auto j = nlohmann::json::parse(pow.out);
  CHECK(j["tool"] == "pgspec");
  CHECK(j["config"]["k"] == 2);
  CHECK(j["claims"].size() == 12);
  bool block_pass = false;
  for (const auto& c : j["claims"])
    if (c["id"] == "block-reduction") block_pass = c["status"] == "PASS";
  CHECK(block_pass);

  const auto enh = cli({"run", "--k", "2", "--p", "3", "--alpha", "0.5", "--graph", "enhanced", "--format", "text", "report"});
  CHECK(enh.code == exit_mismatch);
  CHECK(enh.out.find("FAIL         rd-alpha-spectrum") != std::string::npos);
  CHECK(enh.out.find("PASS         a-alpha-spectrum") != std::string::npos);
}

TEST_CASE("reports are reproducible") {
  const std::vector<std::string> args{"run", "--k", "2", "--p", "3", "--alpha", "0.5", "--seed", "7", "report"};
  CHECK(cli(args).out == cli(args).out);
  const auto dir = scratch("repro");
  const std::vector<std::string> file_args{"run", "--k", "2", "--p", "5", "--alpha", "0.25", "--out", dir.string(), "spectra", "dds"};
  cli(file_args);
  std::map<std::string, std::string> first;
  for (const auto& e : fs::directory_iterator(dir)) first[e.path().filename().string()] = slurp(e.path());
  cli(file_args);
  CHECK_FALSE(first.empty());
  for (const auto& [name, body] : first) CHECK(slurp(dir / name) == body);
}

TEST_CASE("config file and environment") {
  const auto dir = scratch("config");
  write(dir / "run.cfg", "# sweep\nk = 2\np = 5\nalpha = [0.5]\nformat=json\n");
  auto r = cli({"run", "--config", (dir / "run.cfg").string(), "--out", dir.string(), "spectra"});
  CHECK(r.code == exit_ok);
  CHECK(fs::exists(dir / "spectrum_k2_p5_alpha0.5.json"));

  // Command-line flags win over the file.
  r = cli({"run", "--config", (dir / "run.cfg").string(), "--p", "3", "--out", dir.string(), "spectra"});
  CHECK(fs::exists(dir / "spectrum_k2_p3_alpha0.5.json"));

  write(dir / "bad.cfg", "k = 2\ncolour = red\n");
  r = cli({"run", "--config", (dir / "bad.cfg").string(), "build"});
  CHECK(r.code == exit_usage);
  CHECK(r.err.find(":2:") != std::string::npos);

  ::setenv("PGSPEC_P", "7", 1);
  r = cli({"run", "--k", "2", "--alpha", "0", "--out", dir.string(), "spectra"});
  ::unsetenv("PGSPEC_P");
  CHECK(r.code == exit_ok);
  CHECK(fs::exists(dir / "spectrum_k2_p7_alpha0.json"));
}

TEST_CASE("ingest edge list") {
  const auto dir = scratch("ingest");
  write(dir / "p3.txt", "0 1\n1 2\n");
  auto r = cli({"ingest", (dir / "p3.txt").string()});
  CHECK(r.code == exit_ok);
  const auto g = graph_from_json(nlohmann::json::parse(r.out)["graph"]);
  CHECK(g == path_graph(3));

  write(dir / "bad.txt", "0 x\n");
  r = cli({"ingest", (dir / "bad.txt").string()});
  CHECK(r.code == exit_usage);
  CHECK(r.err.find("line 1") != std::string::npos);

  CHECK(cli({"ingest", (dir / "missing.txt").string()}).code == exit_usage);
}

TEST_CASE("ingest json round trip") {
  const auto dir = scratch("roundtrip");
  const auto c = cycle_graph(6);
  write(dir / "c6.json", to_json(c).dump());
  auto r = cli({"ingest", (dir / "c6.json").string(), "--analyze"});
  CHECK(r.code == exit_ok);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(graph_from_json(j["graph"]) == c);
  CHECK(j["psi"]["psi"] == 2);
  CHECK(j["eccentricity"]["radius"] == 3);
}
