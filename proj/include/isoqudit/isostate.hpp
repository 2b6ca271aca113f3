#pragma once

// The SU(2)-invariant family rho^{1s}(alpha, beta) and its spectral data.

#include <array>
#include <optional>

#include "isoqudit/linalg.hpp"

namespace isoqudit {

inline constexpr double kPhysicalTol = 1e-9;
inline constexpr double kRankTol = 1e-9;
inline constexpr int kDefaultSpinCap = 400;  // as 2s

struct ParamPoint {
  double alpha = 0.0;
  double beta = 0.0;

  ParamPoint() = default;
  ParamPoint(double a, double b);

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// Eigenvalues of rho on total-spin blocks J = s+1, s, s-1.
struct BlockSpectrum {
  double lam_plus = 0.0;
  double lam_zero = 0.0;
  double lam_minus = 0.0;
  int mult_plus = 0;
  int mult_zero = 0;
  int mult_minus = 0;

  std::array<double, 3> values() const { return {lam_plus, lam_zero, lam_minus}; }
  std::array<int, 3> multiplicities() const { return {mult_plus, mult_zero, mult_minus}; }
  double min_value() const;
  double trace() const;
};

struct IsoState {
  TwiceSpin s;
  ParamPoint point;
  HermitianOperator matrix;
};

/// The three left-hand sides of the positivity conditions, before the 1/(3(2s+1)) factor.
std::array<double, 3> positivity_conditions(TwiceSpin s, ParamPoint p);

BlockSpectrum block_spectrum(TwiceSpin s, ParamPoint p);

/// Builds the matrix for any (alpha, beta); physicality is checked separately.
IsoState make_state(TwiceSpin s, ParamPoint p);

bool is_physical(TwiceSpin s, ParamPoint p, double tol = kPhysicalTol);

/// Smallest 2s in [2, cap] at which p is a state; nullopt when none. Points outside
/// the closed limit triangle are rejected without scanning.
std::optional<TwiceSpin> fiducial_spin(ParamPoint p, TwiceSpin cap = TwiceSpin(kDefaultSpinCap));

int rank_of(TwiceSpin s, ParamPoint p, double tol = kRankTol);
double relative_rank(TwiceSpin s, ParamPoint p, double tol = kRankTol);

double purity(TwiceSpin s, ParamPoint p);
/// von Neumann entropy in nats.
double entropy(TwiceSpin s, ParamPoint p);

/// Relative-rank bounds of the super-quantum segment at spin s: ((2s-1)/(3N), 4s/(3N)).
std::pair<double, double> super_quantum_rank_bounds(TwiceSpin s);
/// Spin-independent envelope (1/9, 2/3).
std::pair<double, double> universal_rank_bounds();

}  // namespace isoqudit
