#pragma once

// Two-qutrit (s = 1) special case: SU(3)-invariant lines and Gell-Mann forms.
//
// Gell-Mann matrices live in the computational basis e1, e2, e3. They are carried to the
// spin-1 basis |1,1>, |1,0>, |1,-1> by the cartesian identification
//   e1 -> (|-1> - |1>)/sqrt2,  e2 -> i(|-1> + |1>)/sqrt2,  e3 -> |0>,
// under which sum_k |e_k e_k>/sqrt3 is the total-spin singlet.

#include <array>
#include <string>
#include <vector>

#include "isoqudit/geometry.hpp"

namespace isoqudit {

struct Su3Generators {
  std::array<HermitianOperator, 8> lam;      // trace(l_a l_b) = 2 delta_ab
  std::array<HermitianOperator, 8> lam_bar;  // -conj(l_a)
};

Su3Generators su3_generators();

/// Unitary whose columns are the images of e1, e2, e3 in the spin-1 basis.
Matrix cartesian_identification();

/// sum_a l_a (x) l_a in the computational basis.
Matrix casimir_coupling();
/// sum_a l_a (x) lbar_a in the computational basis.
Matrix conjugate_casimir_coupling();

/// Two-qutrit SWAP by index permutation.
Matrix swap_operator();

inline constexpr double kWernerMin = -0.75;
inline constexpr double kWernerMax = 0.375;
inline constexpr double kConjWernerMin = -1.5;
inline constexpr double kConjWernerMax = 3.0 / 16.0;
/// Separability threshold of the 3 x 3 Werner line: separable iff alpha >= -3/16.
inline constexpr double kWernerSeparableAlpha = -3.0 / 16.0;

/// (1/9)(I + alpha l.l), spin basis. Requires alpha in [-3/4, 3/8].
HermitianOperator werner_state(double alpha);
/// (1/9)(I + alpha l.lbar), spin basis. Requires alpha in [-3/2, 3/16].
HermitianOperator conj_werner_state(double alpha);

/// Frobenius distance between an SU(3) form and make_state(1, (alpha, +-2 alpha)).
/// conjugate_rep selects the 3 x 3bar line beta = -2 alpha.
double su3_line_check(double alpha, bool conjugate_rep);

struct QutritVertex {
  std::string name;
  ParamPoint point;
  int total_spin = 0;
  int rank = 0;
};

struct QutritGridPoint {
  ParamPoint point;
  bool physical = false;
  bool ppt = false;
};

struct QutritReport {
  std::vector<QutritVertex> vertices;  // A, B, F
  std::vector<QutritVertex> su3_points;  // representation projector states A, B, E, G
  std::pair<double, double> werner_range{kWernerMin, kWernerMax};
  std::pair<double, double> conj_werner_range{kConjWernerMin, kConjWernerMax};
  double werner_separable_alpha = kWernerSeparableAlpha;
  int grid_n = 0;
  std::vector<QutritGridPoint> grid;
};

QutritReport qutrit_report(int grid_n = 21);

}  // namespace isoqudit
