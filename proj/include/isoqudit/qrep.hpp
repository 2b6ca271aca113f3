#pragma once

// Spin coherent states and the Q representation of the isotropic family.

#include <array>

#include "isoqudit/isostate.hpp"

namespace isoqudit {

struct Direction {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  Direction() = default;
  Direction(double theta, double phi);

  std::array<double, 3> unit_vector() const;
};

/// Angle between two directions.
double angle_between(const Direction& a, const Direction& b);

struct CoherentVector {
  TwiceSpin j;
  Vector amplitudes;
};

/// e^{-i phi J_z} e^{-i theta J_y} |j, j>, amplitudes on |j, m> with m descending.
CoherentVector coherent_state(TwiceSpin j, const Direction& d);

/// (1/4pi) (1 + alpha cos(theta) + beta (cos(2 theta)/8 + 1/24)); independent of s.
double q_density(ParamPoint p, double theta);

/// <n (x) m| rho^{1s} |n (x) m>, n on the spin-1 factor, m on the spin-s factor.
double q_numeric(TwiceSpin s, ParamPoint p, const Direction& n, const Direction& m);

/// Minimum over c in [-1, 1] of 1 + alpha c + (beta/4) c^2 - beta/12.
double q_minimum(ParamPoint p);
/// Nonnegativity of the Q density over all relative angles.
bool q_positive(ParamPoint p);

}  // namespace isoqudit
