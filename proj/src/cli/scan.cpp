#include "isoqudit/cli/scan.hpp"

#include <sstream>
#include <stdexcept>

namespace isoqudit::cli {

ScanMode parse_scan_mode(const std::string& s) {
  if (s == "ppt") return ScanMode::Ppt;
  if (s == "separability") return ScanMode::Separability;
  if (s == "classify") return ScanMode::Classify;
  throw std::invalid_argument("unknown scan mode: " + s);
}

std::string scan_mode_name(ScanMode m) {
  switch (m) {
    case ScanMode::Ppt: return "ppt";
    case ScanMode::Separability: return "separability";
    case ScanMode::Classify: return "classify";
  }
  return "";
}

std::string ScanOptions::canonical() const {
  std::ostringstream os;
  os << "mode=" << scan_mode_name(mode) << ";spin_cap=" << spin_cap;
  if (mode == ScanMode::Separability) {
    os << ";threshold=" << format_real(threshold) << ";max_outer=" << solver.max_outer
       << ";inner_restarts=" << solver.inner_restarts << ";tol_converge=" << format_real(solver.tol_converge)
       << ";prune_below=" << format_real(solver.prune_below) << ";reweight_every=" << solver.reweight_every
       << ";cap_terms=" << solver.cap_terms << ";qp_max_iter=" << solver.qp_max_iter
       << ";seed=" << solver.rng_seed;
  }
  return os.str();
}

ScanRecord evaluate_point(const ScanOptions& opt, ParamPoint p) {
  ScanRecord r;
  r.two_s = opt.s.two_s();
  r.alpha = p.alpha;
  r.beta = p.beta;
  r.seed = point_seed(opt.solver.rng_seed, opt.s, p);
  const auto cls = classify(p, TwiceSpin(opt.spin_cap));
  r.classification = std::string(classification_tag(cls));
  if (const auto sigma = fiducial_spin(p, TwiceSpin(opt.spin_cap))) r.sigma = sigma->two_s();
  r.physical = is_physical(opt.s, p);
  if (!r.physical) return r;

  const bool ppt = is_ppt(opt.s, p);
  r.ppt = ppt ? TriState::True : TriState::False;
  // NPT settles the question in every mode.
  if (!ppt) {
    r.separable = TriState::False;
    return r;
  }
  if (opt.mode != ScanMode::Separability) return r;

  SolverConfig run = opt.solver;
  run.rng_seed = r.seed;
  const auto outcome = is_separable_numeric(opt.s, p, run, opt.threshold);
  if (outcome.result) r.d_hs = outcome.result->d_hs;
  switch (outcome.verdict) {
    case Verdict::Separable: r.separable = TriState::True; break;
    case Verdict::Entangled: r.separable = TriState::False; break;
    case Verdict::Indeterminate: r.separable = TriState::Unknown; break;
  }
  return r;
}

ScanOutput run_scan(const ScanOptions& opt, ResultCache& cache) {
  if (opt.grid < 2) throw std::invalid_argument("grid must be at least 2");
  opt.solver.validate();
  ScanOutput out;
  out.grid = triangle_grid(opt.s, opt.grid);
  const int n = opt.grid * opt.grid;
  out.records.resize(n);
  std::vector<char> from_cache(n, 0);
  const std::string hash = config_hash(opt.canonical());

  parallel_for(n, opt.threads, [&](int idx) {
    const ParamPoint p = out.grid.at(idx % opt.grid, idx / opt.grid);
    if (auto hit = cache.find(opt.s.two_s(), p.alpha, p.beta, hash)) {
      out.records[idx] = *hit;
      from_cache[idx] = 1;
      return;
    }
    out.records[idx] = evaluate_point(opt, p);
    cache.append(out.records[idx], hash);
  });

  auto& sm = out.summary;
  sm.points = n;
  for (int i = 0; i < n; ++i) {
    const auto& r = out.records[i];
    sm.cached += from_cache[i];
    if (!r.physical) continue;
    ++sm.physical;
    if (r.ppt == TriState::True) ++sm.ppt;
    if (opt.mode == ScanMode::Separability) {
      if (r.separable == TriState::True) ++sm.separable;
      if (r.separable == TriState::Unknown) ++sm.indeterminate;
    }
  }
  return out;
}

namespace {

void header_lines(std::ostream& os, const ScanOptions& opt, const GridSpec& g) {
  os << "# two_s " << opt.s.two_s() << '\n'
     << "# grid " << g.grid_n << '\n'
     << "# bbox alpha " << format_real(g.alpha_min) << ' ' << format_real(g.alpha_max) << " beta "
     << format_real(g.beta_min) << ' ' << format_real(g.beta_max) << '\n'
     << "# mode " << scan_mode_name(opt.mode) << '\n'
     << "# seed " << opt.solver.rng_seed << '\n';
}

nlohmann::json bbox_json(const GridSpec& g) {
  return {{"alpha_min", g.alpha_min}, {"alpha_max", g.alpha_max}, {"beta_min", g.beta_min}, {"beta_max", g.beta_max}};
}

}  // namespace

void write_csv(std::ostream& os, const ScanOptions& opt, const ScanOutput& out) {
  header_lines(os, opt, out.grid);
  os << kCsvHeader << '\n';
  for (const auto& r : out.records) os << to_csv_row(r) << '\n';
}

void write_json(std::ostream& os, const ScanOptions& opt, const ScanOutput& out) {
  nlohmann::json j;
  j["two_s"] = opt.s.two_s();
  j["grid"] = out.grid.grid_n;
  j["bbox"] = bbox_json(out.grid);
  j["mode"] = scan_mode_name(opt.mode);
  j["seed"] = opt.solver.rng_seed;
  j["records"] = nlohmann::json::array();
  for (const auto& r : out.records) j["records"].push_back(to_json(r));
  os << j.dump(1) << '\n';
}

nlohmann::json summary_json(const ScanOptions& opt, const ScanOutput& out) {
  const auto& sm = out.summary;
  nlohmann::json j;
  j["two_s"] = opt.s.two_s();
  j["grid"] = out.grid.grid_n;
  j["bbox"] = bbox_json(out.grid);
  j["mode"] = scan_mode_name(opt.mode);
  j["points"] = sm.points;
  j["physical"] = sm.physical;
  j["ppt"] = sm.ppt;
  j["ppt_fraction"] = sm.ppt_fraction();
  j["npt_fraction"] = sm.physical ? 1.0 - sm.ppt_fraction() : 0.0;
  if (opt.mode == ScanMode::Separability) {
    j["separable"] = sm.separable;
    j["separable_fraction"] = sm.separable_fraction();
    j["indeterminate"] = sm.indeterminate;
  }
  j["cached"] = sm.cached;
  return j;
}

}  // namespace isoqudit::cli
