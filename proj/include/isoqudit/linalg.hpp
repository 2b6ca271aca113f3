#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace isoqudit {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Exact spin value stored as the integer 2s.
class TwiceSpin {
 public:
  constexpr TwiceSpin() = default;
  constexpr explicit TwiceSpin(int two_s) : two_s_(two_s) {
    if (two_s < 0) throw std::invalid_argument("TwiceSpin: negative 2s");
  }

  constexpr int two_s() const { return two_s_; }
  constexpr double spin() const { return 0.5 * two_s_; }
  /// Dimension 2s+1 of the spin multiplet.
  constexpr int dim() const { return two_s_ + 1; }

  constexpr TwiceSpin next() const { return TwiceSpin(two_s_ + 1); }

  friend constexpr auto operator<=>(TwiceSpin, TwiceSpin) = default;

 private:
  int two_s_ = 0;
};

inline constexpr TwiceSpin kSpinOne{2};

/// Dense complex Hermitian matrix. Construction verifies Hermiticity.
class HermitianOperator {
 public:
  static constexpr double kHermitianTol = 1e-12;

  HermitianOperator() = default;
  explicit HermitianOperator(Matrix m);

  static HermitianOperator zero(int dim);
  static HermitianOperator identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

  cplx operator()(int i, int j) const { return m_(i, j); }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double c) const;
  friend HermitianOperator operator*(double c, const HermitianOperator& h) { return h * c; }

  double trace() const { return m_.trace().real(); }

 private:
  Matrix m_;
};

/// Largest |A(i,j) - conj(A(j,i))|.
double hermiticity_defect(const Matrix& m);

/// Kronecker product, left factor outer.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Partial transpose on the second factor of a (da*db)-dimensional operator.
Matrix partial_transpose_second(const Matrix& m, int da, int db);

double frobenius_norm(const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);

struct EigenDecomposition {
  RealVector values;  // ascending
  Matrix vectors;     // columns orthonormal
};

/// Dense Hermitian eigendecomposition with ascending eigenvalues.
EigenDecomposition eigh(const Matrix& m);
RealVector eigvalsh(const Matrix& m);

/// Eigenvector of the largest eigenvalue, and that eigenvalue.
std::pair<Vector, double> top_eigenpair(const Matrix& m);

}  // namespace isoqudit
