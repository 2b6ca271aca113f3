#pragma once

// Nearest separable state by Gilbert-type convex optimization over pure product states.
//
// The solver grows sigma = sum_k p_k |a_k b_k><a_k b_k| by Frank-Wolfe steps with exact line
// search toward the product state maximizing <ab|rho - sigma|ab>, and periodically
// re-optimizes all weights over the simplex. The objective is the Hilbert-Schmidt distance;
// the trace distance of the final certificate is reported alongside it.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "isoqudit/geometry.hpp"

namespace isoqudit {

struct ProductTerm {
  Vector a;  // first factor (dimension 3 for the isotropic family)
  Vector b;  // second factor
};

/// Convex combination of pure product projectors.
struct SeparableEnsemble {
  int dim_a = 0;
  int dim_b = 0;
  std::vector<double> weights;
  std::vector<ProductTerm> factors;

  size_t size() const { return weights.size(); }
  Matrix assemble() const;
  /// Throws std::logic_error if weights or factor norms break the ensemble contract.
  void validate(double tol = 1e-12) const;
};

struct SolverConfig {
  int max_outer = 5000;
  int inner_restarts = 20;
  double tol_converge = 1e-12;
  double prune_below = 1e-12;
  int reweight_every = 10;
  int cap_terms = 0;  // 0 selects 10 * dim
  std::uint64_t rng_seed = 0x5eed5eedULL;
  /// Stop as soon as d_hs <= target_distance (0 disables). Verdict queries set this to
  /// their threshold; distance studies leave it off.
  double target_distance = 0.0;
  int qp_max_iter = 3000;

  int effective_cap(int dim) const { return cap_terms > 0 ? cap_terms : 10 * dim; }
  void validate() const;
};

/// TermCap: progress stalled with the ensemble truncated to cap_terms (not converged).
enum class StopReason { Stationary, NoImprovingProduct, TargetReached, IterationLimit, TermCap };
std::string_view stop_reason_name(StopReason r);

struct DistanceResult {
  double d_hs = 0.0;
  double d_trace = 0.0;
  int iterations = 0;
  SeparableEnsemble ensemble;
  bool converged = false;
  StopReason reason = StopReason::IterationLimit;
  std::vector<double> reweight_trace;  // d_hs after each weight re-optimization
};

struct ProductOverlap {
  Vector a;
  Vector b;
  double value = 0.0;
};

/// Alternating top-eigenvector maximization of <a (x) b| g |a (x) b>, best of `restarts`
/// starts (Haar-random b; the first start uses warm_b when given).
ProductOverlap best_product_overlap(const Matrix& g, int dim_a, int dim_b, int restarts, std::mt19937_64& rng,
                                    const Vector* warm_b = nullptr);

/// Haar-random unit vector.
Vector haar_unit_vector(int dim, std::mt19937_64& rng);

/// Minimizes p^T q p - 2 r^T p over the probability simplex by accelerated projected
/// gradient, warm-started from `weights`.
std::vector<double> simplex_qp(const Eigen::MatrixXd& q, const RealVector& r, std::vector<double> weights,
                               int max_iter, double tol = 1e-14);

/// Same problem written around the warm start w: minimizes (x - w)^T q (x - w) - 2 g^T (x - w),
/// where g = r - q w is supplied directly.
std::vector<double> simplex_qp_offset(const Eigen::MatrixXd& q, const RealVector& g, std::vector<double> weights,
                                      int max_iter, double tol = 1e-14);

/// Euclidean projection onto {p >= 0, sum p = 1}.
RealVector project_to_simplex(const RealVector& v);

DistanceResult nearest_separable(const Matrix& rho, int dim_a, int dim_b, const SolverConfig& cfg);
DistanceResult nearest_separable(const IsoState& state, const SolverConfig& cfg);

enum class DistanceMetric { HilbertSchmidt, Trace };
std::string_view metric_name(DistanceMetric m);

enum class Verdict { Separable, Entangled, Indeterminate };
std::string_view verdict_name(Verdict v);

inline constexpr double kSeparabilityThreshold = 1e-3;

struct SeparabilityOutcome {
  Verdict verdict = Verdict::Indeterminate;
  bool decided_by_ppt = false;          // NPT input: entangled without running the solver
  std::optional<DistanceResult> result;  // present whenever the solver ran
};

/// Numeric verdict on an arbitrary density matrix: separable iff the chosen distance is
/// <= threshold; a non-converged run above threshold is indeterminate.
SeparabilityOutcome is_separable_numeric(const Matrix& rho, int dim_a, int dim_b, const SolverConfig& cfg,
                                         double threshold = kSeparabilityThreshold,
                                         DistanceMetric metric = DistanceMetric::HilbertSchmidt);

/// Isotropic-state verdict. NPT states are entangled by the PPT criterion; for PPT states
/// the solver decides. Throws if (s, p) is not a state.
SeparabilityOutcome is_separable_numeric(TwiceSpin s, ParamPoint p, const SolverConfig& cfg,
                                         double threshold = kSeparabilityThreshold,
                                         DistanceMetric metric = DistanceMetric::HilbertSchmidt);

struct TauStep {
  TwiceSpin s;
  bool ppt = false;
  Verdict verdict = Verdict::Entangled;
  std::optional<double> d_hs;
};

struct TauResult {
  std::optional<TwiceSpin> tau;  // nullopt: none found up to the cap, or super-quantum / excluded
  int n_glhv = 0;                // 3(2 tau + 1) when tau is set
  bool rejected_without_solving = false;
  std::vector<TauStep> trail;
};

/// Minimal spin at which p is numerically separable, scanning 2s from the fiducial spin.
TauResult tau_glhv(ParamPoint p, const SolverConfig& cfg, TwiceSpin s_cap,
                   double threshold = kSeparabilityThreshold);

/// Seed for one grid point, derived from the master seed and the point's coordinates.
std::uint64_t point_seed(std::uint64_t master, TwiceSpin s, ParamPoint p);

struct GridSpec {
  TwiceSpin s;
  int grid_n = 0;
  double alpha_min = 0, alpha_max = 0, beta_min = 0, beta_max = 0;

  ParamPoint at(int ia, int ib) const;
};

/// Bounding-box grid of region_triangle(s).
GridSpec triangle_grid(TwiceSpin s, int grid_n);

struct ScanPoint {
  ParamPoint point;
  bool physical = false;
  bool ppt = false;
  Verdict verdict = Verdict::Entangled;
  std::optional<double> d_hs;
  std::uint64_t seed = 0;
};

struct FractionScan {
  GridSpec grid;
  std::vector<ScanPoint> points;  // row-major, beta outer
  int physical = 0;
  int ppt = 0;
  int separable = 0;
  int indeterminate = 0;

  double separable_fraction() const { return physical ? static_cast<double>(separable) / physical : 0.0; }
  double ppt_fraction() const { return physical ? static_cast<double>(ppt) / physical : 0.0; }
};

/// Numeric separability over the physical grid points of region_triangle(s). threads <= 0
/// uses the hardware concurrency.
FractionScan separable_fraction_scan(TwiceSpin s, int grid_n, const SolverConfig& cfg, int threads = 0,
                                     double threshold = kSeparabilityThreshold);

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace isoqudit
