#include "isoqudit/isostate.hpp"

#include <cmath>
#include <string>

#include "isoqudit/geometry.hpp"
#include "isoqudit/operators.hpp"

namespace isoqudit {
namespace {

void require_family_spin(TwiceSpin s) {
  if (s.two_s() < 2) throw std::invalid_argument("isostate: spin-s party needs s >= 1");
}

void require_physical(TwiceSpin s, ParamPoint p, const char* who) {
  if (!is_physical(s, p))
    throw std::domain_error(std::string(who) + ": (alpha, beta) is not a state at 2s = " +
                            std::to_string(s.two_s()));
}

}  // namespace

ParamPoint::ParamPoint(double a, double b) : alpha(a), beta(b) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw std::invalid_argument("ParamPoint: non-finite coordinate");
}

double BlockSpectrum::min_value() const { return std::min({lam_plus, lam_zero, lam_minus}); }

double BlockSpectrum::trace() const {
  return lam_plus * mult_plus + lam_zero * mult_zero + lam_minus * mult_minus;
}

std::array<double, 3> positivity_conditions(TwiceSpin s, ParamPoint p) {
  require_family_spin(s);
  const double x = s.spin();
  const double a = p.alpha;
  const double b = p.beta;
  return {1.0 + a + b / 6.0,                                                  //
          1.0 - a / x - b * (2 * x + 3) / (6 * x),                           //
          1.0 - a * (x + 1) / x + b * (x + 1) * (2 * x + 3) / (6 * x * (2 * x - 1))};
}

BlockSpectrum block_spectrum(TwiceSpin s, ParamPoint p) {
  const auto c = positivity_conditions(s, p);
  const double norm = 3.0 * s.dim();
  const auto mult = block_multiplicities(s);
  return {c[0] / norm, c[1] / norm, c[2] / norm, mult[0], mult[1], mult[2]};
}

IsoState make_state(TwiceSpin s, ParamPoint p) {
  require_family_spin(s);
  const double x = s.spin();
  const int dim = 3 * s.dim();
  Matrix m = Matrix::Identity(dim, dim);
  m += (p.alpha / x) * build_O1(s).matrix();
  m += (p.beta / (x * (2 * x - 1))) * build_O2(s).matrix();
  m /= static_cast<double>(dim);
  return {s, p, HermitianOperator(std::move(m))};
}

bool is_physical(TwiceSpin s, ParamPoint p, double tol) {
  if (tol < 0) throw std::invalid_argument("is_physical: negative tolerance");
  const auto spec = block_spectrum(s, p);
  return spec.min_value() >= -tol / (3.0 * s.dim());
}

std::optional<TwiceSpin> fiducial_spin(ParamPoint p, TwiceSpin cap) {
  if (cap.two_s() < 2) throw std::invalid_argument("fiducial_spin: cap below 2s = 2");
  if (!in_closed_limit_triangle(p)) return std::nullopt;
  for (int n = 2; n <= cap.two_s(); ++n)
    if (is_physical(TwiceSpin(n), p)) return TwiceSpin(n);
  return std::nullopt;
}

int rank_of(TwiceSpin s, ParamPoint p, double tol) {
  require_physical(s, p, "rank_of");
  const auto spec = block_spectrum(s, p);
  const double cut = tol / (3.0 * s.dim());
  int rank = 0;
  const auto v = spec.values();
  const auto m = spec.multiplicities();
  for (int k = 0; k < 3; ++k)
    if (v[k] > cut) rank += m[k];
  return rank;
}

double relative_rank(TwiceSpin s, ParamPoint p, double tol) {
  return static_cast<double>(rank_of(s, p, tol)) / (3.0 * s.dim());
}

double purity(TwiceSpin s, ParamPoint p) {
  require_physical(s, p, "purity");
  const auto spec = block_spectrum(s, p);
  double sum = 0.0;
  const auto v = spec.values();
  const auto m = spec.multiplicities();
  for (int k = 0; k < 3; ++k) sum += m[k] * v[k] * v[k];
  return sum;
}

double entropy(TwiceSpin s, ParamPoint p) {
  require_physical(s, p, "entropy");
  const auto spec = block_spectrum(s, p);
  double sum = 0.0;
  const auto v = spec.values();
  const auto m = spec.multiplicities();
  for (int k = 0; k < 3; ++k)
    if (v[k] > 0) sum -= m[k] * v[k] * std::log(v[k]);
  return sum;
}

std::pair<double, double> super_quantum_rank_bounds(TwiceSpin s) {
  const double n = 3.0 * s.dim();
  return {(s.two_s() - 1) / n, 2.0 * s.two_s() / n};
}

std::pair<double, double> universal_rank_bounds() { return {1.0 / 9.0, 2.0 / 3.0}; }

}  // namespace isoqudit
