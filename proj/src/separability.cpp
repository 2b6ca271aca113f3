#include "isoqudit/separability.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace isoqudit {
namespace {

constexpr double kAlternationTol = 1e-12;
constexpr int kMaxAlternations = 1000;
constexpr int kScreeningSweeps = 8;
constexpr int kRefinePasses = 2;
constexpr int kNewtonRounds = 20;
constexpr double kRoundoffScale = 1e-13;

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

// <b| g_{ii'} |b> for every pair of first-factor indices.
Matrix reduce_to_first(const Matrix& g, const Vector& b, int da, int db) {
  Matrix m(da, da);
  for (int i = 0; i < da; ++i)
    for (int ip = 0; ip < da; ++ip) m(i, ip) = b.dot(g.block(i * db, ip * db, db, db) * b);
  return hermitize(m);
}

// sum_{ii'} conj(a_i) a_i' g_{ii'}
Matrix reduce_to_second(const Matrix& g, const Vector& a, int da, int db) {
  Matrix m = Matrix::Zero(db, db);
  for (int i = 0; i < da; ++i)
    for (int ip = 0; ip < da; ++ip) m += (std::conj(a(i)) * a(ip)) * g.block(i * db, ip * db, db, db);
  return hermitize(m);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Product-state ensemble with its Gram matrix |<psi_k|psi_l>|^2.
class Ensemble {
 public:
  Ensemble(const Matrix& rho, int da, int db) : rho_(rho), da_(da), db_(db) {}

  size_t size() const { return w_.size(); }
  std::vector<double>& weights() { return w_; }

  void add(const ProductOverlap& ov, double weight) {
    const size_t k = w_.size();
    Vector psi = kron(ov.a, ov.b);
    gram_.conservativeResize(k + 1, k + 1);
    for (size_t l = 0; l < k; ++l) {
      const double ov_ab = std::norm(terms_[l].a.dot(ov.a)) * std::norm(terms_[l].b.dot(ov.b));
      gram_(k, l) = gram_(l, k) = ov_ab;
    }
    gram_(k, k) = 1.0;
    terms_.push_back({ov.a, ov.b});
    psi_.push_back(std::move(psi));
    w_.push_back(weight);
  }

  // Keeps entries whose weight is at least `floor`, optionally only the `cap` largest.
  // Returns true when a positive weight was dropped.
  bool prune(double floor, size_t cap = std::numeric_limits<size_t>::max()) {
    std::vector<size_t> keep;
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] >= floor) keep.push_back(k);
    if (keep.size() > cap) {
      std::stable_sort(keep.begin(), keep.end(), [&](size_t x, size_t y) { return w_[x] > w_[y]; });
      keep.resize(cap);
      std::sort(keep.begin(), keep.end());
    }
    if (keep.size() == w_.size()) return false;
    if (keep.empty()) throw std::logic_error("Ensemble::prune: all weights below the floor");
    bool dropped_positive = false;
    for (size_t k = 0, i = 0; k < w_.size(); ++k) {
      if (i < keep.size() && keep[i] == k) ++i;
      else if (w_[k] > 0) dropped_positive = true;
    }
    Eigen::MatrixXd g(keep.size(), keep.size());
    std::vector<double> w;
    std::vector<ProductTerm> t;
    std::vector<Vector> psi;
    for (size_t i = 0; i < keep.size(); ++i) {
      for (size_t j = 0; j < keep.size(); ++j) g(i, j) = gram_(keep[i], keep[j]);
      w.push_back(w_[keep[i]]);
      t.push_back(std::move(terms_[keep[i]]));
      psi.push_back(std::move(psi_[keep[i]]));
    }
    gram_ = std::move(g);
    w_ = std::move(w);
    terms_ = std::move(t);
    psi_ = std::move(psi);
    normalize();
    return dropped_positive;
  }

  // Re-optimizes, drops negligible terms, and re-optimizes again if that moved sigma.
  void settle(int max_iter, double floor) {
    reweight(max_iter, kRefinePasses);
    if (prune(floor)) reweight(max_iter, 1);
  }

  void normalize() {
    const double total = std::accumulate(w_.begin(), w_.end(), 0.0);
    for (auto& x : w_) x /= total;
  }

  // The linear term comes from the explicit residual rho - sigma rather than
  // <psi|rho|psi> - gram_ * w, which cancels catastrophically near the optimum.
  void reweight(int max_iter, int passes) {
    for (int pass = 0; pass < passes; ++pass) {
      const Matrix residual = rho_ - assemble();
      RealVector lin(static_cast<Eigen::Index>(w_.size()));
      for (size_t k = 0; k < w_.size(); ++k) lin(k) = psi_[k].dot(residual * psi_[k]).real();
      w_ = simplex_qp_offset(gram_, lin, w_, max_iter);
    }
  }

  Matrix assemble() const {
    const int dim = da_ * db_;
    Matrix s = Matrix::Zero(dim, dim);
    for (size_t k = 0; k < w_.size(); ++k) s.noalias() += w_[k] * (psi_[k] * psi_[k].adjoint());
    return s;
  }

  SeparableEnsemble export_ensemble() const { return {da_, db_, w_, terms_}; }

 private:
  const Matrix& rho_;
  int da_;
  int db_;
  std::vector<double> w_;
  std::vector<ProductTerm> terms_;
  std::vector<Vector> psi_;
  Eigen::MatrixXd gram_;
};

double trace_distance(const Matrix& diff) { return 0.5 * eigvalsh(hermitize(diff)).cwiseAbs().sum(); }

}  // namespace

Matrix SeparableEnsemble::assemble() const {
  const int dim = dim_a * dim_b;
  Matrix s = Matrix::Zero(dim, dim);
  for (size_t k = 0; k < weights.size(); ++k) {
    const Vector psi = kron(factors[k].a, factors[k].b);
    s.noalias() += weights[k] * (psi * psi.adjoint());
  }
  return s;
}

void SeparableEnsemble::validate(double tol) const {
  if (weights.size() != factors.size()) throw std::logic_error("SeparableEnsemble: size mismatch");
  if (weights.empty()) throw std::logic_error("SeparableEnsemble: empty");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0)) throw std::logic_error("SeparableEnsemble: non-positive weight");
    total += w;
  }
  if (std::abs(total - 1.0) > tol) throw std::logic_error("SeparableEnsemble: weights do not sum to one");
  for (const auto& f : factors) {
    if (f.a.size() != dim_a || f.b.size() != dim_b) throw std::logic_error("SeparableEnsemble: factor dimension");
    if (std::abs(f.a.norm() - 1.0) > tol || std::abs(f.b.norm() - 1.0) > tol)
      throw std::logic_error("SeparableEnsemble: factor not unit norm");
  }
}

void SolverConfig::validate() const {
  if (max_outer < 1 || inner_restarts < 1 || reweight_every < 1 || qp_max_iter < 1)
    throw std::invalid_argument("SolverConfig: iteration counts must be positive");
  if (!(tol_converge > 0) || !(prune_below > 0)) throw std::invalid_argument("SolverConfig: tolerances must be positive");
  if (cap_terms < 0) throw std::invalid_argument("SolverConfig: cap_terms must be >= 1 (or 0 for the default)");
  if (target_distance < 0) throw std::invalid_argument("SolverConfig: negative target distance");
}

std::string_view stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Stationary: return "stationary";
    case StopReason::NoImprovingProduct: return "no_improving_product";
    case StopReason::TargetReached: return "target_reached";
    case StopReason::IterationLimit: return "iteration_limit";
    case StopReason::TermCap: return "term_cap";
  }
  return "unknown";
}

std::string_view metric_name(DistanceMetric m) { return m == DistanceMetric::Trace ? "trace" : "hilbert_schmidt"; }

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Separable: return "separable";
    case Verdict::Entangled: return "entangled";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

Vector haar_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = cplx(n01(rng), n01(rng));
  return v / v.norm();
}

ProductOverlap best_product_overlap(const Matrix& g, int dim_a, int dim_b, int restarts, std::mt19937_64& rng,
                                    const Vector* warm_b) {
  if (g.rows() != dim_a * dim_b || g.cols() != dim_a * dim_b)
    throw std::invalid_argument("best_product_overlap: dimension mismatch");
  if (restarts < 1) throw std::invalid_argument("best_product_overlap: restarts must be positive");

  // Gains are measured relative to the scale of g, which shrinks with the distance.
  const double gain_tol = kAlternationTol * std::max(g.norm(), 1e-300);
  // Alternates from (a, b) for at most max_sweeps sweeps; returns the stationarity flag.
  auto alternate = [&](ProductOverlap& x, int max_sweeps) {
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      auto [nb, vb] = top_eigenpair(reduce_to_second(g, x.a, dim_a, dim_b));
      x.b = std::move(nb);
      auto [na, va] = top_eigenpair(reduce_to_first(g, x.b, dim_a, dim_b));
      x.a = std::move(na);
      const double gain = va - x.value;
      x.value = va;
      if (gain < gain_tol) return true;
    }
    return false;
  };

  ProductOverlap best;
  best.value = -std::numeric_limits<double>::infinity();
  bool best_done = false;
  for (int r = 0; r < restarts; ++r) {
    ProductOverlap x;
    x.b = (r == 0 && warm_b != nullptr && warm_b->size() == dim_b) ? *warm_b : haar_unit_vector(dim_b, rng);
    auto [a, value] = top_eigenpair(reduce_to_first(g, x.b, dim_a, dim_b));
    x.a = std::move(a);
    x.value = value;
    const bool done = alternate(x, kScreeningSweeps);
    if (x.value > best.value) {
      best = std::move(x);
      best_done = done;
    }
  }
  if (!best_done) alternate(best, kMaxAlternations);
  return best;
}

RealVector project_to_simplex(const RealVector& v) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0.0;
  double theta = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    css += u[k];
    const double t = (css - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0) theta = t;
  }
  return (v.array() - theta).max(0.0);
}

std::vector<double> simplex_qp(const Eigen::MatrixXd& q, const RealVector& r, std::vector<double> weights,
                               int max_iter, double tol) {
  const Eigen::Index n = q.rows();
  if (q.cols() != n || r.size() != n || static_cast<Eigen::Index>(weights.size()) != n)
    throw std::invalid_argument("simplex_qp: dimension mismatch");
  const RealVector w = Eigen::Map<const RealVector>(weights.data(), n);
  return simplex_qp_offset(q, r - q * w, std::move(weights), max_iter, tol);
}

std::vector<double> simplex_qp_offset(const Eigen::MatrixXd& q, const RealVector& g, std::vector<double> weights,
                                      int max_iter, double tol) {
  const Eigen::Index n = q.rows();
  if (q.cols() != n || g.size() != n || static_cast<Eigen::Index>(weights.size()) != n)
    throw std::invalid_argument("simplex_qp: dimension mismatch");
  const RealVector w = Eigen::Map<const RealVector>(weights.data(), n);
  // Objective in displacement form, f(x) = (x - w)^T q (x - w) - 2 g^T (x - w).
  auto objective = [&](const RealVector& x) {
    const RealVector dx = x - w;
    return dx.dot(q * dx) - 2.0 * g.dot(dx);
  };

  const RealVector start = project_to_simplex(w);
  // Gradient 2(q(x - w) - g) is Lipschitz with constant 2 lambda_max(q) <= 2 max row sum.
  const double lipschitz = 2.0 * std::max(q.cwiseAbs().rowwise().sum().maxCoeff(), 1e-300);

  RealVector x = start;
  RealVector y = x;
  double t = 1.0;
  for (int it = 0; it < max_iter; ++it) {
    const RealVector grad = 2.0 * (q * (y - w) - g);
    RealVector x_new = project_to_simplex(y - grad / lipschitz);
    const double step = (x_new - x).cwiseAbs().maxCoeff();
    if (grad.dot(x_new - x) > 0) {
      // Momentum restart.
      t = 1.0;
      y = x;
      if (step < tol) break;
      continue;
    }
    const double t_new = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = x_new + ((t - 1.0) / t_new) * (x_new - x);
    x = std::move(x_new);
    t = t_new;
    if (step < tol) break;
  }
  if (objective(x) > objective(start)) x = start;

  // Active-set Newton polish on the support of x; the projected gradient crawls along
  // ill-conditioned directions of q.
  for (int round = 0; round < kNewtonRounds; ++round) {
    std::vector<Eigen::Index> support;
    for (Eigen::Index k = 0; k < n; ++k)
      if (x(k) > 0) support.push_back(k);
    const auto m = static_cast<Eigen::Index>(support.size());
    if (m < 2) break;
    const RealVector h = 2.0 * (q * (x - w) - g);
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
    RealVector rhs(m + 1);
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) kkt(i, j) = 2.0 * q(support[i], support[j]);
      kkt(i, m) = kkt(m, i) = 1.0;
      rhs(i) = -h(support[i]);
    }
    rhs(m) = 0.0;
    const RealVector sol = kkt.completeOrthogonalDecomposition().solve(rhs);
    RealVector delta = RealVector::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) delta(support[i]) = sol(i);
    double tau = 1.0;
    Eigen::Index blocking = -1;
    for (Eigen::Index k = 0; k < n; ++k) {
      if (delta(k) < 0 && x(k) + tau * delta(k) < 0) {
        tau = -x(k) / delta(k);
        blocking = k;
      }
    }
    RealVector x_new = (x + tau * delta).cwiseMax(0.0);
    if (blocking >= 0) x_new(blocking) = 0.0;
    x_new /= x_new.sum();
    if (!(objective(x_new) < objective(x))) break;
    x = std::move(x_new);
    if (blocking < 0) break;
  }
  return {x.data(), x.data() + n};
}

DistanceResult nearest_separable(const Matrix& rho, int dim_a, int dim_b, const SolverConfig& cfg) {
  cfg.validate();
  const int dim = dim_a * dim_b;
  if (rho.rows() != dim || rho.cols() != dim) throw std::invalid_argument("nearest_separable: dimension mismatch");
  const size_t cap = static_cast<size_t>(cfg.effective_cap(dim));
  std::mt19937_64 rng(cfg.rng_seed);

  DistanceResult out;
  Ensemble ens(rho, dim_a, dim_b);
  ProductOverlap first = best_product_overlap(rho, dim_a, dim_b, cfg.inner_restarts, rng);
  ens.add(first, 1.0);
  Vector warm_b = first.b;
  Matrix sigma = ens.assemble();
  double d_ref = (rho - sigma).norm();
  // Weight floor for pruning, scaled by the residual so late, small terms survive.
  const double rho_norm = rho.norm();
  auto prune_floor = [&](double d) { return cfg.prune_below * std::min(1.0, d / rho_norm); };
  bool polished = false;

  int it = 0;
  for (; it < cfg.max_outer; ++it) {
    const Matrix g = rho - sigma;
    const double d = g.norm();
    if (cfg.target_distance > 0 && d <= cfg.target_distance) {
      out.reason = StopReason::TargetReached;
      out.converged = true;
      polished = true;
      break;
    }
    const ProductOverlap ov = best_product_overlap(g, dim_a, dim_b, cfg.inner_restarts, rng, &warm_b);
    warm_b = ov.b;
    // tr(g sigma) with both Hermitian.
    const double g_sigma = g.cwiseProduct(sigma.conjugate()).sum().real();
    const double gap = ov.value - g_sigma;
    if (gap <= 0 || gap <= cfg.tol_converge * d * d) {
      out.reason = StopReason::NoImprovingProduct;
      out.converged = true;
      break;
    }
    const Vector psi = kron(ov.a, ov.b);
    const double sigma_psi = psi.dot(sigma * psi).real();
    const double denom = 1.0 - 2.0 * sigma_psi + sigma.squaredNorm();
    const double t = denom > 0 ? std::clamp(gap / denom, 0.0, 1.0) : 1.0;
    sigma = (1.0 - t) * sigma + t * (psi * psi.adjoint());
    for (auto& w : ens.weights()) w *= (1.0 - t);
    ens.add(ov, t);
    polished = false;

    if ((it + 1) % cfg.reweight_every != 0) continue;

    ens.settle(cfg.qp_max_iter, prune_floor(d_ref));
    bool truncated = false;
    if (ens.size() > cap) {
      ens.prune(0.0, cap);
      ens.settle(cfg.qp_max_iter, prune_floor(d_ref));
      truncated = true;
    }
    sigma = ens.assemble();
    polished = true;
    const double d_new = (rho - sigma).norm();
    out.reweight_trace.push_back(d_new);
    if (!truncated && d_new > d_ref * (1.0 + 1e-9) + 1e-13)
      throw std::logic_error("nearest_separable: distance increased across a weight re-optimization");
    if (cfg.target_distance > 0 && d_new <= cfg.target_distance) {
      out.reason = StopReason::TargetReached;
      out.converged = true;
      ++it;
      break;
    }
    if (d_ref - d_new < cfg.tol_converge * d_ref) {
      // A stall forced by the term cap is not convergence, unless d is already round-off.
      const bool capped = truncated && d_new > kRoundoffScale * rho_norm;
      out.reason = capped ? StopReason::TermCap : StopReason::Stationary;
      out.converged = !capped;
      ++it;
      break;
    }
    d_ref = d_new;
  }

  if (!polished) {
    ens.settle(cfg.qp_max_iter, prune_floor((rho - sigma).norm()));
    sigma = ens.assemble();
  }
  out.iterations = it;
  out.ensemble = ens.export_ensemble();
  const Matrix diff = rho - out.ensemble.assemble();
  out.d_hs = diff.norm();
  out.d_trace = trace_distance(diff);
  return out;
}

DistanceResult nearest_separable(const IsoState& state, const SolverConfig& cfg) {
  if (!is_physical(state.s, state.point))
    throw std::domain_error("nearest_separable: input is not a density matrix");
  return nearest_separable(state.matrix.matrix(), 3, state.s.dim(), cfg);
}

SeparabilityOutcome is_separable_numeric(const Matrix& rho, int dim_a, int dim_b, const SolverConfig& cfg,
                                         double threshold, DistanceMetric metric) {
  if (!(threshold > 0)) throw std::invalid_argument("is_separable_numeric: threshold must be positive");
  SolverConfig run = cfg;
  const int dim = dim_a * dim_b;
  // Trace distance <= sqrt(dim)/2 * HS distance, so this target guarantees the verdict.
  run.target_distance = metric == DistanceMetric::HilbertSchmidt ? threshold : 2.0 * threshold / std::sqrt(dim);
  SeparabilityOutcome out;
  out.result = nearest_separable(rho, dim_a, dim_b, run);
  const double d = metric == DistanceMetric::HilbertSchmidt ? out.result->d_hs : out.result->d_trace;
  if (d <= threshold)
    out.verdict = Verdict::Separable;
  else
    out.verdict = out.result->converged ? Verdict::Entangled : Verdict::Indeterminate;
  return out;
}

SeparabilityOutcome is_separable_numeric(TwiceSpin s, ParamPoint p, const SolverConfig& cfg, double threshold,
                                         DistanceMetric metric) {
  if (!is_ppt(s, p)) return {Verdict::Entangled, true, std::nullopt};
  const auto state = make_state(s, p);
  auto out = is_separable_numeric(state.matrix.matrix(), 3, s.dim(), cfg, threshold, metric);
  return out;
}

TauResult tau_glhv(ParamPoint p, const SolverConfig& cfg, TwiceSpin s_cap, double threshold) {
  TauResult out;
  const auto cls = classify(p, s_cap);
  const auto* interior = std::get_if<InteriorClassical>(&cls);
  if (interior == nullptr || !interior->sigma) {
    out.rejected_without_solving = interior == nullptr;
    return out;
  }
  for (int n = interior->sigma->two_s(); n <= s_cap.two_s(); ++n) {
    const TwiceSpin s(n);
    TauStep step{s, is_ppt(s, p), Verdict::Entangled, std::nullopt};
    if (step.ppt) {
      SolverConfig run = cfg;
      run.rng_seed = point_seed(cfg.rng_seed, s, p);
      const auto verdict = is_separable_numeric(s, p, run, threshold);
      step.verdict = verdict.verdict;
      if (verdict.result) step.d_hs = verdict.result->d_hs;
    }
    out.trail.push_back(step);
    if (step.verdict == Verdict::Separable) {
      out.tau = s;
      out.n_glhv = 3 * s.dim();
      break;
    }
  }
  return out;
}

std::uint64_t point_seed(std::uint64_t master, TwiceSpin s, ParamPoint p) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ static_cast<std::uint64_t>(s.two_s()));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(p.alpha));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(p.beta));
  return h;
}

ParamPoint GridSpec::at(int ia, int ib) const {
  const double fa = grid_n > 1 ? static_cast<double>(ia) / (grid_n - 1) : 0.0;
  const double fb = grid_n > 1 ? static_cast<double>(ib) / (grid_n - 1) : 0.0;
  return {alpha_min + (alpha_max - alpha_min) * fa, beta_min + (beta_max - beta_min) * fb};
}

GridSpec triangle_grid(TwiceSpin s, int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("triangle_grid: grid_n must be at least 2");
  const auto tri = region_triangle(s);
  GridSpec g{s, grid_n, tri.vertices[0].alpha, tri.vertices[0].alpha, tri.vertices[0].beta, tri.vertices[0].beta};
  for (const auto& v : tri.vertices) {
    g.alpha_min = std::min(g.alpha_min, v.alpha);
    g.alpha_max = std::max(g.alpha_max, v.alpha);
    g.beta_min = std::min(g.beta_min, v.beta);
    g.beta_max = std::max(g.beta_max, v.beta);
  }
  return g;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, std::max(n, 1));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

FractionScan separable_fraction_scan(TwiceSpin s, int grid_n, const SolverConfig& cfg, int threads,
                                     double threshold) {
  FractionScan scan;
  scan.grid = triangle_grid(s, grid_n);
  scan.points.resize(static_cast<size_t>(grid_n) * grid_n);
  parallel_for(grid_n * grid_n, threads, [&](int idx) {
    const int ib = idx / grid_n;
    const int ia = idx % grid_n;
    ScanPoint sp;
    sp.point = scan.grid.at(ia, ib);
    sp.seed = point_seed(cfg.rng_seed, s, sp.point);
    sp.physical = is_physical(s, sp.point);
    if (sp.physical) {
      sp.ppt = is_ppt(s, sp.point);
      SolverConfig run = cfg;
      run.rng_seed = sp.seed;
      const auto verdict = is_separable_numeric(s, sp.point, run, threshold);
      sp.verdict = verdict.verdict;
      if (verdict.result) sp.d_hs = verdict.result->d_hs;
    }
    scan.points[idx] = sp;
  });
  for (const auto& sp : scan.points) {
    if (!sp.physical) continue;
    ++scan.physical;
    if (sp.ppt) ++scan.ppt;
    if (sp.verdict == Verdict::Separable) ++scan.separable;
    if (sp.verdict == Verdict::Indeterminate) ++scan.indeterminate;
  }
  return scan;
}

}  // namespace isoqudit
