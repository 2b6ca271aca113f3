#include "isoqudit/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "isoqudit/cli/scan.hpp"
#include "isoqudit/qrep.hpp"

namespace isoqudit::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnwritableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double finite(double x, const char* flag) {
  if (!std::isfinite(x)) throw UsageError(std::string(flag) + " must be finite");
  return x;
}

TwiceSpin spin_flag(int two_s, int min_two_s, const char* flag) {
  if (two_s < min_two_s) throw UsageError(std::string(flag) + " must be at least " + std::to_string(min_two_s));
  return TwiceSpin(two_s);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw UnwritableError("cannot write " + path);
  return f;
}

json point_json(ParamPoint p) { return {{"alpha", p.alpha}, {"beta", p.beta}}; }
json edge_json(const EdgeLine& e) { return {{"a", e.a}, {"b", e.b}, {"c", e.c}}; }
json optional_json(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

// Expands `--config FILE` into flags for every key the command line does not set.
std::vector<std::string> apply_config_file(std::vector<std::string> args) {
  std::optional<std::string> path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      path = args[i + 1];
      args.erase(args.begin() + i, args.begin() + i + 2);
      break;
    }
    if (args[i].starts_with("--config=")) {
      path = args[i].substr(9);
      args.erase(args.begin() + i);
      break;
    }
  }
  if (!path) return args;
  std::ifstream in(*path);
  if (!in) throw UsageError("cannot read config file " + *path);
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line " + std::to_string(n) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string flag = "--" + key;
    const bool given = std::any_of(args.begin(), args.end(),
                                   [&](const std::string& a) { return a == flag || a.starts_with(flag + "="); });
    if (!given) args.push_back(flag + "=" + value);
  }
  return args;
}

struct SolverFlags {
  std::uint64_t seed = SolverConfig{}.rng_seed;
  int max_outer = SolverConfig{}.max_outer;
  int restarts = SolverConfig{}.inner_restarts;
  double tol = SolverConfig{}.tol_converge;
  double prune = SolverConfig{}.prune_below;
  int reweight_every = SolverConfig{}.reweight_every;
  int cap_terms = SolverConfig{}.cap_terms;
  int qp_max_iter = SolverConfig{}.qp_max_iter;
  double threshold = kSeparabilityThreshold;

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "master RNG seed");
    app->add_option("--max-outer", max_outer, "outer iteration limit");
    app->add_option("--restarts", restarts, "random starts per product-state search");
    app->add_option("--tol", tol, "relative convergence tolerance");
    app->add_option("--prune-below", prune, "weight pruning floor");
    app->add_option("--reweight-every", reweight_every, "steps between weight re-optimizations");
    app->add_option("--cap-terms", cap_terms, "ensemble size cap (0 = 10 * dimension)");
    app->add_option("--qp-max-iter", qp_max_iter, "weight re-optimization iteration limit");
    app->add_option("--threshold", threshold, "separability threshold on the distance");
  }

  SolverConfig config() const {
    SolverConfig c;
    c.rng_seed = seed;
    c.max_outer = max_outer;
    c.inner_restarts = restarts;
    c.tol_converge = tol;
    c.prune_below = prune;
    c.reweight_every = reweight_every;
    c.cap_terms = cap_terms;
    c.qp_max_iter = qp_max_iter;
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!(threshold > 0) || !std::isfinite(threshold)) throw UsageError("--threshold must be positive");
    return c;
  }
};

json config_json(const SolverConfig& c) {
  return {{"max_outer", c.max_outer},         {"inner_restarts", c.inner_restarts},
          {"tol_converge", c.tol_converge},   {"prune_below", c.prune_below},
          {"reweight_every", c.reweight_every}, {"cap_terms", c.cap_terms},
          {"qp_max_iter", c.qp_max_iter},     {"target_distance", c.target_distance},
          {"rng_seed", c.rng_seed}};
}

json ensemble_json(TwiceSpin s, ParamPoint p, const DistanceResult& r, const SolverConfig& c) {
  auto factor_array = [](const Vector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back({v(i).real(), v(i).imag()});
    return a;
  };
  json fa = json::array();
  json fb = json::array();
  for (const auto& t : r.ensemble.factors) {
    fa.push_back(factor_array(t.a));
    fb.push_back(factor_array(t.b));
  }
  return {{"two_s", s.two_s()},     {"alpha", p.alpha},         {"beta", p.beta},
          {"d_hs", r.d_hs},         {"d_trace", r.d_trace},     {"weights", r.ensemble.weights},
          {"factors_a", fa},        {"factors_b", fb},          {"config", config_json(c)},
          {"seed", c.rng_seed}};
}

json classify_report(ParamPoint p, std::optional<int> two_s, int cap_two_s) {
  const TwiceSpin cap = spin_flag(cap_two_s, 2, "--cap");
  const auto cls = classify(p, cap);
  const auto sigma = classification_sigma(cls);
  json j;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["classification"] = std::string(classification_tag(cls));
  j["sigma"] = sigma ? json(sigma->spin()) : json(nullptr);
  j["sigma_two_s"] = sigma ? json(sigma->two_s()) : json(nullptr);
  j["cap_two_s"] = cap.two_s();
  if (const auto* in = std::get_if<InteriorClassical>(&cls)) j["ppt_at_sigma"] = in->ppt_at_sigma;
  j["q_positive"] = q_positive(p);
  j["q_minimum"] = q_minimum(p);

  const int last = two_s ? *two_s : cap.two_s();
  json per = json::array();
  for (int n = 2; n <= last; ++n) {
    const TwiceSpin s(n);
    const bool phys = is_physical(s, p);
    per.push_back({{"two_s", n}, {"physical", phys}, {"ppt", phys ? json(is_ppt(s, p)) : json(nullptr)}});
  }
  j["per_spin"] = per;

  std::optional<TwiceSpin> at = two_s ? std::optional<TwiceSpin>(TwiceSpin(*two_s)) : sigma;
  json st;
  if (at) {
    st["two_s"] = at->two_s();
    const bool phys = is_physical(*at, p);
    st["physical"] = phys;
    st["ppt"] = phys ? json(is_ppt(*at, p)) : json(nullptr);
    st["rank"] = phys ? json(rank_of(*at, p)) : json(nullptr);
    st["relative_rank"] = phys ? json(relative_rank(*at, p)) : json(nullptr);
    st["purity"] = phys ? json(purity(*at, p)) : json(nullptr);
    st["entropy"] = phys ? json(entropy(*at, p)) : json(nullptr);
  }
  j["state"] = at ? st : json(nullptr);
  return j;
}

json region_report(std::optional<int> two_s, bool limit) {
  if (limit == two_s.has_value()) throw UsageError("region needs exactly one of --two-s or --limit");
  json j;
  if (limit) {
    const auto t = limit_triangle();
    const char* names[3] = {"S", "V", "W"};
    j["limit"] = true;
    j["vertices"] = json::array();
    for (int k = 0; k < 3; ++k) {
      auto v = point_json(t.vertices[k]);
      v["name"] = names[k];
      j["vertices"].push_back(v);
    }
    j["edges"] = json::array();
    for (const auto& e : t.edges) j["edges"].push_back(edge_json(e));
    j["area"] = triangle_area(t);
    j["area_fraction"] = 1.0;
    return j;
  }
  const TwiceSpin s = spin_flag(*two_s, 2, "--two-s");
  const auto t = region_triangle(s);
  j["two_s"] = s.two_s();
  j["spin"] = s.spin();
  j["vertices"] = json::array();
  for (const auto& v : t.vertices) j["vertices"].push_back(point_json(v));
  j["edges"] = json::array();
  for (const auto& e : t.edges) j["edges"].push_back(edge_json(e));
  j["area"] = triangle_area(t);
  j["area_fraction"] = area_fraction(s);
  j["ppt_area_fraction"] = ppt_area_fraction(s);
  if (s.two_s() == 16) j["reference_fraction"] = 0.837;
  return j;
}

void write_qfunc(std::ostream& out, ParamPoint p, int samples) {
  if (samples < 2) throw UsageError("--samples must be at least 2");
  out << "# alpha " << format_real(p.alpha) << '\n'
      << "# beta " << format_real(p.beta) << '\n'
      << "# q_positive=" << (q_positive(p) ? "true" : "false") << '\n'
      << "theta,f\n";
  for (int k = 0; k < samples; ++k) {
    const double theta = k == samples - 1 ? std::numbers::pi : std::numbers::pi * k / (samples - 1);
    out << format_real(theta) << ',' << format_real(q_density(p, theta)) << '\n';
  }
}

json separability_report(TwiceSpin s, ParamPoint p, const SolverConfig& cfg, double threshold, DistanceMetric metric,
                         const std::string& ensemble_out) {
  if (!is_physical(s, p)) throw UsageError("(alpha, beta) is not a state at this spin");
  std::optional<std::ofstream> ens_file;
  if (!ensemble_out.empty()) ens_file = open_output(ensemble_out);
  const auto outcome = is_separable_numeric(s, p, cfg, threshold, metric);
  json j;
  j["two_s"] = s.two_s();
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["ppt"] = is_ppt(s, p);
  j["verdict"] = std::string(verdict_name(outcome.verdict));
  j["decided_by_ppt"] = outcome.decided_by_ppt;
  j["metric"] = std::string(metric_name(metric));
  j["threshold"] = threshold;
  j["seed"] = cfg.rng_seed;
  if (outcome.result) {
    const auto& r = *outcome.result;
    j["d_hs"] = r.d_hs;
    j["d_trace"] = r.d_trace;
    j["iterations"] = r.iterations;
    j["terms"] = r.ensemble.size();
    j["converged"] = r.converged;
    j["stop_reason"] = std::string(stop_reason_name(r.reason));
    if (ens_file) {
      *ens_file << ensemble_json(s, p, r, cfg).dump(1) << '\n';
      if (!*ens_file) throw UnwritableError("cannot write " + ensemble_out);
    }
  } else if (ens_file) {
    *ens_file << json{{"two_s", s.two_s()}, {"alpha", p.alpha}, {"beta", p.beta}, {"ensemble", nullptr}}.dump(1)
              << '\n';
  }
  return j;
}

json tau_report(ParamPoint p, const SolverConfig& cfg, int s_cap, double threshold) {
  const auto res = tau_glhv(p, cfg, spin_flag(s_cap, 2, "--s-cap"), threshold);
  json j;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["tau_two_s"] = res.tau ? json(res.tau->two_s()) : json(nullptr);
  j["tau"] = res.tau ? json(res.tau->spin()) : json(nullptr);
  j["n_glhv"] = res.tau ? json(res.n_glhv) : json(nullptr);
  j["rejected_without_solving"] = res.rejected_without_solving;
  j["trail"] = json::array();
  for (const auto& st : res.trail)
    j["trail"].push_back({{"two_s", st.s.two_s()},
                          {"ppt", st.ppt},
                          {"verdict", std::string(verdict_name(st.verdict))},
                          {"d_hs", optional_json(st.d_hs)}});
  return j;
}

struct TableRow {
  const char* name;
  int two_s;
  int reference_terms;
};
constexpr TableRow kTableRows[] = {{"3x3", 2, 50}, {"3x5", 4, 100}, {"3x11", 10, 300}, {"3x17", 16, 600}};
const ParamPoint kTablePoint{0.0, -0.5};

json tables_report(const SolverConfig& cfg, double threshold, double budget_seconds) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - t0).count(); };
  json j;
  bool complete = true;
  j["ensemble_sizes"] = json::array();
  for (const auto& row : kTableRows) {
    const TwiceSpin s(row.two_s);
    json r{{"dimension", row.name}, {"two_s", row.two_s},           {"alpha", kTablePoint.alpha},
           {"beta", kTablePoint.beta}, {"reference_terms", row.reference_terms}};
    if (budget_seconds > 0 && elapsed() >= budget_seconds) {
      r["complete"] = false;
      complete = false;
      j["ensemble_sizes"].push_back(r);
      continue;
    }
    SolverConfig run = cfg;
    run.rng_seed = point_seed(cfg.rng_seed, s, kTablePoint);
    const auto t1 = clock::now();
    const auto outcome = is_separable_numeric(s, kTablePoint, run, threshold);
    const auto& res = *outcome.result;
    r["terms"] = res.ensemble.size();
    r["ratio_to_reference"] = static_cast<double>(res.ensemble.size()) / row.reference_terms;
    r["d_hs"] = res.d_hs;
    r["verdict"] = std::string(verdict_name(outcome.verdict));
    r["seconds"] = std::chrono::duration<double>(clock::now() - t1).count();
    r["complete"] = true;
    j["ensemble_sizes"].push_back(r);
  }
  j["rank_bounds"] = json::array();
  for (int s2 = 2; s2 <= 16; s2 += 2) {
    const auto [lo, hi] = super_quantum_rank_bounds(TwiceSpin(s2));
    j["rank_bounds"].push_back({{"s", s2 / 2}, {"two_s", s2}, {"lower", lo}, {"upper", hi}});
  }
  const auto [ulo, uhi] = universal_rank_bounds();
  j["universal_rank_bounds"] = {{"lower", ulo}, {"upper", uhi}};
  j["complete"] = complete;
  j["budget_seconds"] = budget_seconds;
  return j;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  args = apply_config_file(std::move(args));

  CLI::App app{"isotropic spin-1 x spin-s states: regions, PPT and separability"};
  app.require_subcommand(1);

  double alpha = 0, beta = 0;
  std::optional<int> two_s;
  int cap = kDefaultSpinCap;

  auto* classify_cmd = app.add_subcommand("classify", "classify a parameter point");
  classify_cmd->add_option("--alpha", alpha)->required();
  classify_cmd->add_option("--beta", beta)->required();
  classify_cmd->add_option("--two-s", two_s, "spin (as 2s) for the per-spin table and state data");
  classify_cmd->add_option("--cap", cap, "largest 2s searched for the fiducial spin");

  bool limit = false;
  auto* region_cmd = app.add_subcommand("region", "physical triangle of a spin, or the limit triangle");
  region_cmd->add_option("--two-s", two_s);
  region_cmd->add_flag("--limit", limit);

  int samples = 0;
  auto* qfunc_cmd = app.add_subcommand("qfunc", "Q-representation density along theta");
  qfunc_cmd->add_option("--alpha", alpha)->required();
  qfunc_cmd->add_option("--beta", beta)->required();
  qfunc_cmd->add_option("--samples", samples)->required();

  SolverFlags solver;
  std::string metric = "hs";
  std::string ensemble_out;
  bool tau = false;
  int s_cap = 16;
  auto* sep_cmd = app.add_subcommand("separability", "numeric separability of one state");
  sep_cmd->add_option("--alpha", alpha)->required();
  sep_cmd->add_option("--beta", beta)->required();
  sep_cmd->add_option("--two-s", two_s, "spin as 2s (not used with --tau)");
  sep_cmd->add_option("--metric", metric, "hs or trace")->check(CLI::IsMember({"hs", "trace"}));
  sep_cmd->add_option("--ensemble-out", ensemble_out, "write the separable ensemble as JSON");
  sep_cmd->add_flag("--tau", tau, "search the smallest separable spin from the fiducial spin");
  sep_cmd->add_option("--s-cap", s_cap, "largest 2s for --tau");
  solver.attach(sep_cmd);

  int grid = 0;
  std::string mode = "ppt";
  std::string out_path;
  std::string cache_path;
  std::string format = "csv";
  int threads = 1;
  auto* scan_cmd = app.add_subcommand("scan", "grid scan over a spin's triangle");
  scan_cmd->add_option("--two-s", two_s)->required();
  scan_cmd->add_option("--grid", grid)->required();
  scan_cmd->add_option("--mode", mode)->check(CLI::IsMember({"ppt", "separability", "classify"}));
  scan_cmd->add_option("--out", out_path, "output file (standard output when absent)");
  scan_cmd->add_option("--cache", cache_path, "JSONL cache (default $ISOQUDIT_CACHE)");
  scan_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  scan_cmd->add_option("--cap", cap, "largest 2s searched for the fiducial spin");
  solver.attach(scan_cmd);

  double budget = 0;
  auto* tables_cmd = app.add_subcommand("tables", "ensemble-size and rank-bound tables");
  tables_cmd->add_option("--budget-seconds", budget, "stop starting new solver rows after this long (0 = no limit)");
  solver.attach(tables_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (classify_cmd->parsed()) {
    const ParamPoint p{finite(alpha, "--alpha"), finite(beta, "--beta")};
    if (two_s) spin_flag(*two_s, 2, "--two-s");
    out << classify_report(p, two_s, cap).dump(1) << '\n';
  } else if (region_cmd->parsed()) {
    out << region_report(two_s, limit).dump(1) << '\n';
  } else if (qfunc_cmd->parsed()) {
    const ParamPoint p{finite(alpha, "--alpha"), finite(beta, "--beta")};
    std::ostringstream buf;
    write_qfunc(buf, p, samples);
    out << buf.str();
  } else if (sep_cmd->parsed()) {
    const ParamPoint p{finite(alpha, "--alpha"), finite(beta, "--beta")};
    const SolverConfig cfg = solver.config();
    if (tau) {
      out << tau_report(p, cfg, s_cap, solver.threshold).dump(1) << '\n';
    } else {
      if (!two_s) throw UsageError("separability needs --two-s (or --tau)");
      const TwiceSpin s = spin_flag(*two_s, 2, "--two-s");
      const auto m = metric == "trace" ? DistanceMetric::Trace : DistanceMetric::HilbertSchmidt;
      out << separability_report(s, p, cfg, solver.threshold, m, ensemble_out).dump(1) << '\n';
    }
  } else if (scan_cmd->parsed()) {
    ScanOptions opt;
    opt.s = spin_flag(*two_s, 2, "--two-s");
    if (grid < 2) throw UsageError("--grid must be at least 2");
    opt.grid = grid;
    opt.mode = parse_scan_mode(mode);
    opt.format = format == "json" ? ScanFormat::Json : ScanFormat::Csv;
    opt.solver = solver.config();
    opt.threshold = solver.threshold;
    opt.spin_cap = spin_flag(cap, 2, "--cap").two_s();
    if (threads < 0) throw UsageError("--threads must be non-negative");
    opt.threads = threads;

    if (cache_path.empty())
      if (const char* env = std::getenv("ISOQUDIT_CACHE")) cache_path = env;
    std::optional<std::ofstream> file;
    if (!out_path.empty()) file = open_output(out_path);
    ResultCache cache(cache_path);
    cache.load();
    const auto result = run_scan(opt, cache);
    std::ostream& data = file ? static_cast<std::ostream&>(*file) : out;
    if (opt.format == ScanFormat::Json)
      write_json(data, opt, result);
    else
      write_csv(data, opt, result);
    data.flush();
    if (!data) throw UnwritableError("cannot write " + (out_path.empty() ? std::string("output") : out_path));
    (file ? out : err) << summary_json(opt, result).dump(1) << '\n';
  } else if (tables_cmd->parsed()) {
    if (!(budget >= 0) || !std::isfinite(budget)) throw UsageError("--budget-seconds must be non-negative");
    out << tables_report(solver.config(), solver.threshold, budget).dump(1) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnwritableError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnwritable;
  } catch (const CacheCorruption& e) {
    err << "error: corrupt " << e.what() << '\n';
    return kExitCacheCorrupt;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace isoqudit::cli
