#include "isoqudit/operators.hpp"

#include <cmath>

namespace isoqudit {
namespace {

void require_family_spin(TwiceSpin s, const char* who) {
  if (s.two_s() < 2) throw std::invalid_argument(std::string(who) + ": spin-s party needs s >= 1");
}

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

Matrix CartesianVectorOp::casimir() const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (const auto& c : components) out += c.matrix() * c.matrix();
  return out;
}

int CartesianRank2Op::index(int i, int j) {
  if (i > j) std::swap(i, j);
  // (0,0) (0,1) (0,2) (1,1) (1,2) (2,2)
  static constexpr int table[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return table[i][j];
}

CartesianVectorOp spin_matrices(TwiceSpin j) {
  if (j.two_s() < 1) throw std::invalid_argument("spin_matrices: spin 0 has a trivial algebra");
  const int d = j.dim();
  const double jj = j.spin();
  Matrix sp = Matrix::Zero(d, d);
  Matrix sz = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) {
    const double m = jj - k;
    sz(k, k) = m;
    // <j, m+1 | S_+ | j, m> sits one row above.
    if (k > 0) sp(k - 1, k) = std::sqrt(jj * (jj + 1) - m * (m + 1));
  }
  const Matrix sm = sp.adjoint();
  const cplx i{0.0, 1.0};
  Matrix sx = 0.5 * (sp + sm);
  Matrix sy = -0.5 * i * (sp - sm);
  return {{HermitianOperator(std::move(sx)), HermitianOperator(std::move(sy)), HermitianOperator(std::move(sz))}};
}

CartesianRank2Op rank2_tensor(const CartesianVectorOp& s) {
  const Matrix third_casimir = s.casimir() / 3.0;
  std::array<HermitianOperator, 6> upper;
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      Matrix t = 0.5 * (s[i].matrix() * s[j].matrix() + s[j].matrix() * s[i].matrix());
      if (i == j) t -= third_casimir;
      upper[k++] = HermitianOperator(hermitize(t));
    }
  }
  return CartesianRank2Op(std::move(upper));
}

HermitianOperator build_O1(TwiceSpin s) {
  require_family_spin(s, "build_O1");
  const auto sigma = spin_matrices(kSpinOne);
  const auto t = spin_matrices(s);
  const int dim = 3 * s.dim();
  Matrix out = Matrix::Zero(dim, dim);
  for (int i = 0; i < 3; ++i) out += kron(sigma[i].matrix(), t[i].matrix());
  return HermitianOperator(hermitize(out));
}

HermitianOperator build_O2(TwiceSpin s) {
  require_family_spin(s, "build_O2");
  const auto sigma = rank2_tensor(spin_matrices(kSpinOne));
  const auto t = rank2_tensor(spin_matrices(s));
  const int dim = 3 * s.dim();
  Matrix out = Matrix::Zero(dim, dim);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out += kron(sigma(i, j).matrix(), t(i, j).matrix());
  return HermitianOperator(hermitize(out));
}

std::array<double, 3> o1_block_eigenvalues(TwiceSpin s) {
  const double x = s.spin();
  return {x, -1.0, -(x + 1.0)};
}

std::array<double, 3> o2_block_eigenvalues(TwiceSpin s) {
  const double x = s.spin();
  return {x * (2 * x - 1) / 6.0, -(2 * x + 3) * (2 * x - 1) / 6.0, (x + 1) * (2 * x + 3) / 6.0};
}

std::array<int, 3> block_multiplicities(TwiceSpin s) {
  const int n = s.two_s();
  return {n + 3, n + 1, n - 1};
}

BlockProjectors block_projectors(TwiceSpin s) {
  require_family_spin(s, "block_projectors");
  const Matrix o1 = build_O1(s).matrix();
  const auto x = o1_block_eigenvalues(s);
  const int dim = 3 * s.dim();
  const Matrix id = Matrix::Identity(dim, dim);
  std::array<Matrix, 3> p;
  for (int a = 0; a < 3; ++a) {
    p[a] = id;
    for (int b = 0; b < 3; ++b)
      if (b != a) p[a] = p[a] * (o1 - x[b] * id) / (x[a] - x[b]);
  }
  return {HermitianOperator(hermitize(p[0])), HermitianOperator(hermitize(p[1])),
          HermitianOperator(hermitize(p[2]))};
}

HermitianOperator total_jz(TwiceSpin s) {
  const auto sigma = spin_matrices(kSpinOne);
  const auto t = spin_matrices(s);
  return HermitianOperator(Matrix(kron(sigma[2].matrix(), Matrix::Identity(s.dim(), s.dim())) +
                                  kron(Matrix::Identity(3, 3), t[2].matrix())));
}

}  // namespace isoqudit
