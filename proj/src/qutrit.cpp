#include "isoqudit/qutrit.hpp"

#include <cmath>
#include <stdexcept>

namespace isoqudit {
namespace {

Matrix to_spin_basis(const Matrix& comp) {
  const Matrix u = cartesian_identification();
  const Matrix uu = kron(u, u);
  return uu * comp * uu.adjoint();
}

void require_range(double alpha, double lo, double hi, const char* who) {
  if (!(alpha >= lo && alpha <= hi))
    throw std::domain_error(std::string(who) + ": alpha outside the positive range");
}

int dominant_block(const BlockSpectrum& spec) {
  // Total spin of the only nonzero block; -1 when more than one block is occupied.
  const auto v = spec.values();
  int found = -1;
  for (int k = 0; k < 3; ++k) {
    if (v[k] > kRankTol / 9.0) {
      if (found >= 0) return -1;
      found = k;
    }
  }
  return found < 0 ? -1 : 2 - found;
}

}  // namespace

Su3Generators su3_generators() {
  const cplx i{0.0, 1.0};
  std::array<Matrix, 8> l;
  for (auto& m : l) m = Matrix::Zero(3, 3);
  l[0](0, 1) = l[0](1, 0) = 1;
  l[1](0, 1) = -i;
  l[1](1, 0) = i;
  l[2](0, 0) = 1;
  l[2](1, 1) = -1;
  l[3](0, 2) = l[3](2, 0) = 1;
  l[4](0, 2) = -i;
  l[4](2, 0) = i;
  l[5](1, 2) = l[5](2, 1) = 1;
  l[6](1, 2) = -i;
  l[6](2, 1) = i;
  const double r3 = 1.0 / std::sqrt(3.0);
  l[7](0, 0) = l[7](1, 1) = r3;
  l[7](2, 2) = -2 * r3;

  Su3Generators g;
  for (int a = 0; a < 8; ++a) {
    g.lam[a] = HermitianOperator(l[a]);
    g.lam_bar[a] = HermitianOperator(Matrix(-l[a].conjugate()));
  }
  return g;
}

Matrix cartesian_identification() {
  const double r = 1.0 / std::sqrt(2.0);
  const cplx i{0.0, 1.0};
  Matrix u = Matrix::Zero(3, 3);
  // rows: m = 1, 0, -1
  u(0, 0) = -r;
  u(2, 0) = r;
  u(0, 1) = i * r;
  u(2, 1) = i * r;
  u(1, 2) = 1;
  return u;
}

Matrix casimir_coupling() {
  const auto g = su3_generators();
  Matrix out = Matrix::Zero(9, 9);
  for (const auto& l : g.lam) out += kron(l.matrix(), l.matrix());
  return out;
}

Matrix conjugate_casimir_coupling() {
  const auto g = su3_generators();
  Matrix out = Matrix::Zero(9, 9);
  for (int a = 0; a < 8; ++a) out += kron(g.lam[a].matrix(), g.lam_bar[a].matrix());
  return out;
}

Matrix swap_operator() {
  Matrix s = Matrix::Zero(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s(j * 3 + i, i * 3 + j) = 1;
  return s;
}

HermitianOperator werner_state(double alpha) {
  require_range(alpha, kWernerMin, kWernerMax, "werner_state");
  Matrix m = (Matrix::Identity(9, 9) + alpha * casimir_coupling()) / 9.0;
  m = to_spin_basis(m);
  return HermitianOperator(Matrix(0.5 * (m + m.adjoint())));
}

HermitianOperator conj_werner_state(double alpha) {
  require_range(alpha, kConjWernerMin, kConjWernerMax, "conj_werner_state");
  Matrix m = (Matrix::Identity(9, 9) + alpha * conjugate_casimir_coupling()) / 9.0;
  m = to_spin_basis(m);
  return HermitianOperator(Matrix(0.5 * (m + m.adjoint())));
}

double su3_line_check(double alpha, bool conjugate_rep) {
  if (conjugate_rep) {
    const auto rho = make_state(kSpinOne, {alpha, -2 * alpha});
    return (conj_werner_state(alpha).matrix() - rho.matrix.matrix()).norm();
  }
  const auto rho = make_state(kSpinOne, {alpha, 2 * alpha});
  return (werner_state(alpha).matrix() - rho.matrix.matrix()).norm();
}

QutritReport qutrit_report(int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("qutrit_report: grid_n must be at least 2");
  QutritReport r;
  const auto tri = region_triangle(kSpinOne);
  const char* names[3] = {"A", "B", "F"};
  for (int k = 0; k < 3; ++k) {
    const auto p = tri.vertices[k];
    r.vertices.push_back({names[k], p, dominant_block(block_spectrum(kSpinOne, p)), rank_of(kSpinOne, p)});
  }
  const std::array<std::pair<const char*, ParamPoint>, 4> su3 = {
      std::pair{"A", ParamPoint{kConjWernerMin, -2 * kConjWernerMin}},
      std::pair{"B", ParamPoint{kWernerMin, 2 * kWernerMin}},
      std::pair{"E", ParamPoint{kConjWernerMax, -2 * kConjWernerMax}},
      std::pair{"G", ParamPoint{kWernerMax, 2 * kWernerMax}}};
  for (const auto& [name, p] : su3)
    r.su3_points.push_back({name, p, dominant_block(block_spectrum(kSpinOne, p)), rank_of(kSpinOne, p)});

  r.grid_n = grid_n;
  double amin = tri.vertices[0].alpha, amax = amin, bmin = tri.vertices[0].beta, bmax = bmin;
  for (const auto& v : tri.vertices) {
    amin = std::min(amin, v.alpha);
    amax = std::max(amax, v.alpha);
    bmin = std::min(bmin, v.beta);
    bmax = std::max(bmax, v.beta);
  }
  for (int ib = 0; ib < grid_n; ++ib) {
    for (int ia = 0; ia < grid_n; ++ia) {
      const ParamPoint p{amin + (amax - amin) * ia / (grid_n - 1), bmin + (bmax - bmin) * ib / (grid_n - 1)};
      QutritGridPoint gp{p, is_physical(kSpinOne, p), false};
      if (gp.physical) gp.ppt = is_ppt(kSpinOne, p);
      r.grid.push_back(gp);
    }
  }
  return r;
}

}  // namespace isoqudit
