#include "isoqudit/qrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isoqudit {
namespace {

constexpr double kQPositiveTol = 1e-12;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Direction::Direction(double t, double p) : theta(t), phi(p) {
  if (!(t >= 0.0 && t <= std::numbers::pi)) throw std::invalid_argument("Direction: theta outside [0, pi]");
  if (!(p >= 0.0 && p < 2 * std::numbers::pi)) throw std::invalid_argument("Direction: phi outside [0, 2pi)");
}

std::array<double, 3> Direction::unit_vector() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double angle_between(const Direction& a, const Direction& b) {
  const auto u = a.unit_vector();
  const auto v = b.unit_vector();
  const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

CoherentVector coherent_state(TwiceSpin j, const Direction& d) {
  const int n = j.two_s();
  const double c = std::cos(0.5 * d.theta);
  const double s = std::sin(0.5 * d.theta);
  Vector amp(n + 1);
  for (int k = 0; k <= n; ++k) {
    // k = j - m
    const double m = j.spin() - k;
    const double mag = std::sqrt(binomial(n, k)) * std::pow(c, n - k) * std::pow(s, k);
    amp(k) = mag * std::exp(cplx(0.0, -m * d.phi));
  }
  return {j, amp};
}

double q_density(ParamPoint p, double theta) {
  return (1.0 + p.alpha * std::cos(theta) + p.beta * (std::cos(2 * theta) / 8.0 + 1.0 / 24.0)) /
         (4 * std::numbers::pi);
}

double q_numeric(TwiceSpin s, ParamPoint p, const Direction& n, const Direction& m) {
  const auto rho = make_state(s, p);
  const Vector v = kron(coherent_state(kSpinOne, n).amplitudes, coherent_state(s, m).amplitudes);
  return (v.adjoint() * rho.matrix.matrix() * v)(0, 0).real();
}

double q_minimum(ParamPoint p) {
  const double a = p.alpha;
  const double b = p.beta;
  auto g = [&](double c) { return 1.0 + a * c + 0.25 * b * c * c - b / 12.0; };
  double lo = std::min(g(-1.0), g(1.0));
  if (b != 0.0) {
    const double crit = -2.0 * a / b;
    if (crit > -1.0 && crit < 1.0) lo = std::min(lo, g(crit));
  }
  return lo;
}

bool q_positive(ParamPoint p) { return q_minimum(p) >= -kQPositiveTol; }

}  // namespace isoqudit
