#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "isoqudit/cli/app.hpp"
#include "isoqudit/cli/records.hpp"
#include "isoqudit/cli/scan.hpp"
#include "json.hpp"

using namespace isoqudit;
using namespace isoqudit::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("isoqudit_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("classify examples") {
  auto r = run({"classify", "--alpha", "0", "--beta", "0", "--two-s", "4"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["classification"] == "interior_classical");
  CHECK(j["sigma_two_s"] == 2);
  CHECK(j["ppt_at_sigma"] == true);
  CHECK(j["q_positive"] == true);
  CHECK(j["per_spin"].size() == 3);
  CHECK(j["state"]["rank"] == 15);

  j = json::parse(run({"classify", "--alpha", "-1.5", "--beta", "3"}).out);
  CHECK(j["classification"] == "super_quantum");
  j = json::parse(run({"classify", "--alpha", "1.5", "--beta", "3"}).out);
  CHECK(j["classification"] == "boundary_vw");
  j = json::parse(run({"classify", "--alpha", "3", "--beta", "0"}).out);
  CHECK(j["classification"] == "outside_svw");
  CHECK(j["q_positive"] == false);
  CHECK(j["sigma"].is_null());
}

TEST_CASE("region examples") {
  auto j = json::parse(run({"region", "--two-s", "2"}).out);
  CHECK(j["area_fraction"].get<double>() == 0.3);
  CHECK(j["vertices"][2]["alpha"].get<double>() == doctest::Approx(0.75));
  CHECK(j["vertices"][2]["beta"].get<double>() == doctest::Approx(0.3));
  j = json::parse(run({"region", "--two-s", "16"}).out);
  CHECK(j["area_fraction"].get<double>() == doctest::Approx(0.795).epsilon(1e-3));
  CHECK(j["ppt_area_fraction"].get<double>() == doctest::Approx(0.837).epsilon(1e-3));
  j = json::parse(run({"region", "--limit"}).out);
  CHECK(j["area"].get<double>() == 13.5);
  CHECK(run({"region"}).code == kExitUsage);
}

TEST_CASE("qfunc output") {
  const auto r = run({"qfunc", "--alpha", "-1.5", "--beta", "3", "--samples", "3"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  REQUIRE(lines.size() == 7);
  CHECK(lines[2] == "# q_positive=true");
  CHECK(lines[3] == "theta,f");
  CHECK(lines[4].starts_with("0,"));
  CHECK(std::abs(std::stod(lines[4].substr(2))) < 1e-15);
  CHECK(run({"qfunc", "--alpha", "0", "--beta", "0", "--samples", "1"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({"classify", "--alpha", "nan", "--beta", "0"}).code == kExitUsage);
  CHECK(run({"classify", "--alpha", "0"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"scan", "--two-s", "2", "--grid", "1"}).code == kExitUsage);
  CHECK(run({"scan", "--two-s", "2", "--grid", "4", "--mode", "fast"}).code == kExitUsage);
  CHECK(run({"separability", "--alpha", "1", "--beta", "0", "--two-s", "2"}).code == kExitUsage);
  CHECK(run({"separability", "--alpha", "0", "--beta", "0"}).code == kExitUsage);
  CHECK(run({"scan", "--two-s", "2", "--grid", "4", "--config", "/nonexistent/file"}).code == kExitUsage);
}

TEST_CASE("scan CSV matches the golden file byte for byte") {
  TempDir tmp;
  const auto out = tmp.path / "scan.csv";
  const auto r = run({"scan", "--two-s", "2", "--grid", "5", "--mode", "ppt", "--out", out.string()});
  REQUIRE(r.code == 0);
  CHECK(slurp(out) == slurp(fs::path(ISOQUDIT_GOLDEN_DIR) / "scan_s1_grid5_ppt.csv"));
  const auto summary = json::parse(r.out);
  CHECK(summary["physical"] == 8);
  CHECK(summary["ppt"] == 3);
}

TEST_CASE("scan to stdout puts the summary on stderr") {
  const auto r = run({"scan", "--two-s", "2", "--grid", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.starts_with("# two_s 2\n"));
  CHECK(json::parse(r.err)["points"] == 9);
}

TEST_CASE("unwritable output") {
  const auto r = run({"scan", "--two-s", "2", "--grid", "3", "--out", "/nonexistent/dir/x.csv"});
  CHECK(r.code == kExitUnwritable);
}

TEST_CASE("corrupt cache reports the line") {
  TempDir tmp;
  const auto cache = tmp.path / "cache.jsonl";
  REQUIRE(run({"scan", "--two-s", "2", "--grid", "3", "--cache", cache.string()}).code == 0);
  std::ofstream(cache, std::ios::app) << "{not json\n";
  const auto r = run({"scan", "--two-s", "2", "--grid", "3", "--cache", cache.string()});
  CHECK(r.code == kExitCacheCorrupt);
  CHECK(r.err.find("line 10") != std::string::npos);
}

TEST_CASE("cache reuse is bit identical and later lines win") {
  TempDir tmp;
  const auto cache = tmp.path / "cache.jsonl";
  const auto a = tmp.path / "a.csv";
  const auto b = tmp.path / "b.csv";
  const std::vector<std::string> base{"scan", "--two-s", "3", "--grid", "4", "--mode", "separability",
                                      "--max-outer", "300", "--cache", cache.string()};
  auto args = base;
  args.insert(args.end(), {"--out", a.string()});
  REQUIRE(run(args).code == 0);
  args = base;
  args.insert(args.end(), {"--out", b.string()});
  const auto second = run(args);
  REQUIRE(second.code == 0);
  CHECK(json::parse(second.out)["cached"] == 16);
  CHECK(slurp(a) == slurp(b));

  ResultCache c(cache.string());
  c.load();
  CHECK(c.size() == 16);
  // Append a conflicting copy of the first record; the loader keeps it.
  std::istringstream lines(slurp(cache));
  std::string first;
  std::getline(lines, first);
  auto j = json::parse(first);
  const std::string hash = j["config_hash"];
  j["classification"] = "overwritten";
  std::ofstream(cache, std::ios::app) << j.dump() << '\n';
  ResultCache d(cache.string());
  d.load();
  CHECK(d.size() == 16);
  const auto hit = d.find(j["two_s"], j["alpha"], j["beta"], hash);
  REQUIRE(hit);
  CHECK(hit->classification == "overwritten");
}

TEST_CASE("ISOQUDIT_CACHE supplies the default cache") {
  TempDir tmp;
  const auto cache = tmp.path / "env.jsonl";
  ::setenv("ISOQUDIT_CACHE", cache.string().c_str(), 1);
  const auto r = run({"scan", "--two-s", "2", "--grid", "3"});
  ::setenv("ISOQUDIT_CACHE", "", 1);
  REQUIRE(r.code == 0);
  CHECK(fs::exists(cache));
  CHECK(fs::file_size(cache) > 0);
}

TEST_CASE("flags override the config file, which overrides defaults") {
  TempDir tmp;
  const auto cfg = tmp.path / "run.conf";
  write_file(cfg, "# comment\nseed = 7\ngrid=3\n");
  auto r = run({"scan", "--two-s", "2", "--config", cfg.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("# seed 7\n") != std::string::npos);
  CHECK(r.out.find("# grid 3\n") != std::string::npos);
  r = run({"scan", "--two-s", "2", "--seed", "9", "--config", cfg.string()});
  CHECK(r.out.find("# seed 9\n") != std::string::npos);
  r = run({"scan", "--two-s", "2", "--grid", "3"});
  CHECK(r.out.find("# seed 1592614637\n") != std::string::npos);
  write_file(cfg, "seed\n");
  CHECK(run({"scan", "--two-s", "2", "--config", cfg.string()}).code == kExitUsage);
}

TEST_CASE("separability subcommand and ensemble export") {
  TempDir tmp;
  const auto ens = tmp.path / "ens.json";
  const auto r = run({"separability", "--alpha", "0", "--beta", "0", "--two-s", "2", "--ensemble-out", ens.string()});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["verdict"] == "separable");
  CHECK(j["ppt"] == true);
  const auto e = json::parse(slurp(ens));
  CHECK(e["weights"].size() == e["factors_a"].size());
  CHECK(e["factors_a"][0].size() == 3);
  CHECK(e["factors_a"][0][0].size() == 2);

  const auto npt = json::parse(run({"separability", "--alpha", "-1", "--beta", "0", "--two-s", "2"}).out);
  CHECK(npt["verdict"] == "entangled");
  CHECK(npt["decided_by_ppt"] == true);

  const auto tau = json::parse(run({"separability", "--alpha", "0", "--beta", "0", "--tau", "--s-cap", "4"}).out);
  CHECK(tau["tau_two_s"] == 2);
  CHECK(tau["n_glhv"] == 9);
}

TEST_CASE("tables respect the time budget") {
  const auto r = run({"tables", "--budget-seconds", "0.000001", "--max-outer", "50"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["complete"] == false);
  CHECK(j["ensemble_sizes"].size() == 4);
  CHECK(j["ensemble_sizes"][3]["complete"] == false);
  CHECK(j["rank_bounds"][0]["lower"].get<double>() == doctest::Approx(1.0 / 9));
  CHECK(j["rank_bounds"][0]["upper"].get<double>() == doctest::Approx(4.0 / 9));
}

TEST_CASE("records") {
  ScanRecord r;
  r.two_s = 2;
  r.alpha = 0.1;
  r.beta = -0.2;
  r.physical = true;
  r.ppt = TriState::False;
  r.separable = TriState::True;
  CHECK_THROWS_AS(r.validate(), std::logic_error);
  r.ppt = TriState::True;
  CHECK_NOTHROW(r.validate());
  r.d_hs = 1e-4;
  r.sigma = 2;
  r.classification = "interior_classical";
  r.seed = 42;
  const auto back = record_from_json(to_json(r));
  CHECK(to_csv_row(back) == to_csv_row(r));
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(config_hash("x").size() == 16);
  CHECK(config_hash("x") != config_hash("y"));
  CHECK(tri_state_text(TriState::Unknown).empty());
  CHECK(tri_state_json(TriState::Unknown).is_null());
}

TEST_CASE("separable points are always PPT in separability scans") {
  ScanOptions opt;
  opt.s = TwiceSpin(2);
  opt.grid = 5;
  opt.mode = ScanMode::Separability;
  opt.solver.max_outer = 300;
  ResultCache none;
  const auto out = run_scan(opt, none);
  int sep = 0;
  for (const auto& rec : out.records) {
    CHECK_NOTHROW(rec.validate());
    if (rec.separable == TriState::True) {
      ++sep;
      CHECK(rec.ppt == TriState::True);
    }
    if (!rec.physical) CHECK(rec.separable == TriState::Unknown);
  }
  CHECK(sep == out.summary.separable);
  CHECK(sep > 0);
}
