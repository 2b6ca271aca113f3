#pragma once

// Angular-momentum and cartesian tensor operators for the coupled 1 (x) s system.
//
// Conventions used across the library:
//   * basis |j, m> with m descending (S_z diagonal, entries j, j-1, ..., -j);
//   * the spin-1 factor is the left (outer) factor of every Kronecker product;
//   * hbar = 1.

#include <array>

#include "isoqudit/linalg.hpp"

namespace isoqudit {

/// Cartesian components (x, y, z) of a vector operator.
struct CartesianVectorOp {
  std::array<HermitianOperator, 3> components;

  const HermitianOperator& operator[](int i) const { return components[i]; }
  int dim() const { return components[0].dim(); }
  /// S.S
  Matrix casimir() const;
};

/// Symmetric traceless rank-2 cartesian tensor; only i <= j is stored.
class CartesianRank2Op {
 public:
  explicit CartesianRank2Op(std::array<HermitianOperator, 6> upper) : upper_(std::move(upper)) {}

  const HermitianOperator& operator()(int i, int j) const { return upper_[index(i, j)]; }
  int dim() const { return upper_[0].dim(); }

 private:
  static int index(int i, int j);
  std::array<HermitianOperator, 6> upper_;
};

CartesianVectorOp spin_matrices(TwiceSpin j);

/// (S_i S_j + S_j S_i)/2 - delta_ij S.S/3
CartesianRank2Op rank2_tensor(const CartesianVectorOp& s);

/// O1 = sum_i Sigma_i (x) T_i on dimension 3(2s+1).
HermitianOperator build_O1(TwiceSpin s);

/// O2 = sum_ij Sigma_ij (x) T_ij on dimension 3(2s+1).
HermitianOperator build_O2(TwiceSpin s);

/// Closed-form eigenvalues of O1 on blocks J = s+1, s, s-1.
std::array<double, 3> o1_block_eigenvalues(TwiceSpin s);
/// Closed-form eigenvalues of O2 on blocks J = s+1, s, s-1.
std::array<double, 3> o2_block_eigenvalues(TwiceSpin s);
/// Block dimensions (2s+3, 2s+1, 2s-1).
std::array<int, 3> block_multiplicities(TwiceSpin s);

struct BlockProjectors {
  HermitianOperator upper;   // J = s+1
  HermitianOperator middle;  // J = s
  HermitianOperator lower;   // J = s-1

  const HermitianOperator& operator[](int k) const { return k == 0 ? upper : (k == 1 ? middle : lower); }
};

/// Total-spin block projectors via Lagrange interpolation in O1.
BlockProjectors block_projectors(TwiceSpin s);

/// Total J_z = Sigma_z (x) I + I (x) T_z.
HermitianOperator total_jz(TwiceSpin s);

}  // namespace isoqudit
