#include <numbers>
#include <random>

#include "doctest.h"
#include "isoqudit/operators.hpp"
#include "isoqudit/qrep.hpp"

using namespace isoqudit;

constexpr double kPi = std::numbers::pi;

TEST_CASE("direction ranges") {
  CHECK_THROWS_AS(Direction(-0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Direction(0, 2 * kPi), std::invalid_argument);
  CHECK(angle_between(Direction(0, 0), Direction(kPi, 0)) == doctest::Approx(kPi));
}

TEST_CASE("coherent states") {
  const auto north = coherent_state(TwiceSpin(4), Direction(0, 1.0));
  CHECK(std::abs(north.amplitudes(0)) == doctest::Approx(1.0));
  CHECK(north.amplitudes.tail(4).norm() < 1e-15);
  const auto eq = coherent_state(kSpinOne, Direction(kPi / 2, 0));
  CHECK(eq.amplitudes(0).real() == doctest::Approx(0.5));
  CHECK(eq.amplitudes(1).real() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(eq.amplitudes(2).real() == doctest::Approx(0.5));
}

TEST_CASE("coherent states are spin eigenstates along their direction") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ut(0, kPi), up(0, 2 * kPi);
  for (int n = 1; n <= 9; ++n) {
    const TwiceSpin j(n);
    const Direction d(ut(rng), up(rng));
    const auto v = coherent_state(j, d).amplitudes;
    CHECK(v.norm() == doctest::Approx(1.0));
    const auto s = spin_matrices(j);
    const auto u = d.unit_vector();
    const Matrix sn = u[0] * s[0].matrix() + u[1] * s[1].matrix() + u[2] * s[2].matrix();
    CHECK((sn * v - j.spin() * v).norm() < 1e-12);
  }
}

TEST_CASE("q density values") {
  for (double t : {0.0, 1.0, kPi})
    CHECK(q_density({0, 0}, t) == doctest::Approx(1 / (4 * kPi)));
  CHECK(std::abs(q_density({-1.5, 3}, 0)) < 1e-16);
  CHECK(q_density({-1.5, 3}, kPi) == doctest::Approx(3 / (4 * kPi)));
}

TEST_CASE("numeric Q function equals the closed form") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ut(0, kPi), up(0, 2 * kPi), ua(-1.5, 1.5), ub(-6, 3);
  for (int n : {2, 4, 7, 16}) {
    const TwiceSpin s(n);
    for (int k = 0; k < 10; ++k) {
      const Direction a(ut(rng), up(rng)), b(ut(rng), up(rng));
      const ParamPoint p{ua(rng), ub(rng)};
      const double lhs = 3.0 * s.dim() * q_numeric(s, p, a, b);
      CHECK(std::abs(lhs - 4 * kPi * q_density(p, angle_between(a, b))) < 1e-10);
    }
  }
  CHECK(q_numeric(kSpinOne, {0, 0}, Direction(0.3, 1), Direction(2, 4)) == doctest::Approx(1.0 / 9));
  CHECK(std::abs(q_numeric(TwiceSpin(4), {-1.5, 3}, Direction(1, 2), Direction(1, 2))) < 1e-12);
}

TEST_CASE("q positivity") {
  CHECK(q_positive({0, 0}));
  CHECK(q_positive({-1.5, 3}));
  CHECK(std::abs(q_minimum({-1.5, 3})) < 1e-15);
  CHECK_FALSE(q_positive({3, 0}));
  CHECK(q_minimum({3, 0}) == doctest::Approx(-2.0));
}

TEST_CASE("q minimum agrees with dense sampling") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ua(-4, 4), ub(-10, 10);
  for (int k = 0; k < 50; ++k) {
    const ParamPoint p{ua(rng), ub(rng)};
    double lo = 1e300;
    for (int i = 0; i <= 20000; ++i) lo = std::min(lo, 4 * kPi * q_density(p, kPi * i / 20000));
    CHECK(q_minimum(p) == doctest::Approx(lo).epsilon(1e-6));
  }
}
