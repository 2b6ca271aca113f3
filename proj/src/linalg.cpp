#include "isoqudit/linalg.hpp"

#include <cmath>
#include <string>

namespace isoqudit {

HermitianOperator::HermitianOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("HermitianOperator: matrix not square");
  const double defect = hermiticity_defect(m_);
  if (defect > kHermitianTol)
    throw std::invalid_argument("HermitianOperator: not Hermitian (defect " + std::to_string(defect) +
                                ")");
}

HermitianOperator HermitianOperator::zero(int dim) { return HermitianOperator(Matrix::Zero(dim, dim)); }

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  return HermitianOperator(Matrix(m_ + o.m_));
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  return HermitianOperator(Matrix(m_ - o.m_));
}

HermitianOperator HermitianOperator::operator*(double c) const { return HermitianOperator(Matrix(m_ * c)); }

double hermiticity_defect(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Matrix partial_transpose_second(const Matrix& m, int da, int db) {
  if (m.rows() != da * db || m.cols() != da * db)
    throw std::invalid_argument("partial_transpose_second: dimension mismatch");
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < da; ++i)
    for (int ip = 0; ip < da; ++ip)
      out.block(i * db, ip * db, db, db) = m.block(i * db, ip * db, db, db).transpose();
  return out;
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

EigenDecomposition eigh(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigvalsh(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigvalsh: eigensolver failed");
  return solver.eigenvalues();
}

std::pair<Vector, double> top_eigenpair(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("top_eigenpair: eigensolver failed");
  const Eigen::Index last = m.rows() - 1;
  return {solver.eigenvectors().col(last), solver.eigenvalues()(last)};
}

}  // namespace isoqudit
