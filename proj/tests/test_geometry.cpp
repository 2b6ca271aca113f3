#include <random>

#include "doctest.h"
#include "isoqudit/geometry.hpp"

using namespace isoqudit;

namespace {

void check_point(ParamPoint got, double a, double b) {
  CHECK(got.alpha == doctest::Approx(a).epsilon(1e-12));
  CHECK(got.beta == doctest::Approx(b).epsilon(1e-12));
}

template <class T>
bool holds(const Classification& c) {
  return std::holds_alternative<T>(c);
}

}  // namespace

TEST_CASE("pt map") {
  check_point(pt_map({-1, 0}), 1, 0);
  check_point(pt_map(kVertexS), kVertexW.alpha, kVertexW.beta);
}

TEST_CASE("triangle vertices") {
  const auto t1 = region_triangle(kSpinOne);
  check_point(t1.vertices[0], -1.5, 3);
  check_point(t1.vertices[1], -0.75, -1.5);
  check_point(t1.vertices[2], 0.75, 0.3);
  const auto t8 = region_triangle(TwiceSpin(16));
  check_point(t8.vertices[0], -1.5, 3);
  check_point(t8.vertices[1], -1.0 / 6, -5);
  check_point(t8.vertices[2], 4.0 / 3, 40.0 / 19);
  const auto lim = limit_triangle();
  check_point(lim.vertices[0], -1.5, 3);
  check_point(lim.vertices[1], 0, -6);
  check_point(lim.vertices[2], 1.5, 3);
}

TEST_CASE("triangle vertices are points where two positivity conditions vanish") {
  for (int n = 2; n <= 30; ++n) {
    const TwiceSpin s(n);
    const auto t = region_triangle(s);
    for (const auto& v : t.vertices) {
      CHECK(is_physical(s, v));
      int zeros = 0;
      for (double c : positivity_conditions(s, v)) zeros += std::abs(c) < 1e-9;
      CHECK(zeros >= 2);
    }
  }
}

TEST_CASE("triangle membership agrees with physicality") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ua(-2, 2), ub(-7, 4);
  for (int n : {2, 5, 16}) {
    const TwiceSpin s(n);
    const auto t = region_triangle(s);
    for (int k = 0; k < 400; ++k) {
      const ParamPoint p{ua(rng), ub(rng)};
      CHECK(t.contains(p, 0.0) == is_physical(s, p, 0.0));
    }
  }
}

TEST_CASE("the reflection maps SV to VW") {
  const auto lim = limit_triangle();
  for (const auto& p : sample_segment_sv(10)) {
    CHECK(std::abs(lim.edges[0].value(p)) < 1e-12);
    CHECK(std::abs(lim.edges[2].value(pt_map(p))) < 1e-12);
  }
}

TEST_CASE("areas") {
  CHECK(triangle_area(limit_triangle()) == 13.5);
  CHECK(area_fraction(kSpinOne) == doctest::Approx(0.3).epsilon(1e-15));
  double prev = 0;
  for (int n = 2; n <= 60; n += 2) {
    const double f = area_fraction(TwiceSpin(n));
    CHECK(f > prev);
    CHECK(f < 1.0);
    prev = f;
  }
  CHECK(area_fraction(TwiceSpin(4000)) > 0.995);
}

TEST_CASE("area fraction at s = 8 by Monte Carlo") {
  const TwiceSpin s(16);
  const auto lim = limit_triangle();
  const auto t = region_triangle(s);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ua(-1.5, 1.5), ub(-6, 3);
  int in_lim = 0, in_t = 0;
  for (int k = 0; k < 400000; ++k) {
    const ParamPoint p{ua(rng), ub(rng)};
    if (!lim.contains(p, 0.0)) continue;
    ++in_lim;
    in_t += t.contains(p, 0.0);
  }
  const double mc = static_cast<double>(in_t) / in_lim;
  CHECK(std::abs(mc - area_fraction(s)) / area_fraction(s) < 0.005);
}

TEST_CASE("clipping") {
  const std::vector<ParamPoint> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(polygon_area(square) == doctest::Approx(1.0));
  const auto half = clip_polygon(square, {0.5, -1.0, 0.0});  // alpha <= 0.5
  CHECK(polygon_area(half) == doctest::Approx(0.5));
  CHECK(clip_polygon(square, {-5.0, 1.0, 0.0}).empty());
}

TEST_CASE("PPT share of the triangle") {
  CHECK(ppt_area_fraction(kSpinOne) == doctest::Approx(1.0 / 3));
  std::mt19937_64 rng(5);
  const TwiceSpin s(16);
  const auto t = region_triangle(s);
  std::uniform_real_distribution<double> ua(-1.5, 4.0 / 3), ub(-5, 3);
  int phys = 0, ppt = 0;
  for (int k = 0; k < 200000; ++k) {
    const ParamPoint p{ua(rng), ub(rng)};
    if (!t.contains(p, 0.0)) continue;
    ++phys;
    ppt += t.contains(pt_map(p), 0.0);
  }
  CHECK(static_cast<double>(ppt) / phys == doctest::Approx(ppt_area_fraction(s)).epsilon(0.01));
}

TEST_CASE("PPT via the reflection agrees with the explicit partial transpose") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ua(-1.5, 1.5), ub(-6, 3);
  for (int n : {2, 3, 6}) {
    const TwiceSpin s(n);
    int tested = 0;
    while (tested < 15) {
      const ParamPoint p{ua(rng), ub(rng)};
      if (!is_physical(s, p)) continue;
      ++tested;
      const Matrix pt = partial_transpose_second(make_state(s, p).matrix.matrix(), 3, s.dim());
      const double min_ev = eigvalsh(0.5 * (pt + pt.adjoint()))(0);
      if (std::abs(min_ev) < 1e-9) continue;
      CHECK(is_ppt(s, p) == (min_ev > 0));
    }
  }
}

TEST_CASE("PPT examples") {
  CHECK_FALSE(is_ppt(kSpinOne, {-1, 0}));
  CHECK(is_ppt(kSpinOne, {0, 0}));
  CHECK_FALSE(is_ppt(TwiceSpin(6), {-0.5, -1}));
  CHECK(is_ppt(TwiceSpin(7), {-0.5, -1}));
  CHECK(is_ppt(TwiceSpin(8), {-0.5, -1}));
  CHECK_THROWS_AS(is_ppt(kSpinOne, {1, 0}), std::domain_error);
}

TEST_CASE("classification") {
  const auto s = classify(kVertexS);
  REQUIRE(holds<SuperQuantum>(s));
  CHECK(std::get<SuperQuantum>(s).sigma->two_s() == 2);
  CHECK(holds<SuperQuantum>(classify({-1, 0})));
  CHECK(holds<BoundaryVW>(classify(kVertexV)));
  CHECK(holds<BoundaryVW>(classify(kVertexW)));
  CHECK(holds<BoundaryWSExceptS>(classify({0, 3})));
  const auto u = classify({0, 0});
  REQUIRE(holds<InteriorClassical>(u));
  CHECK(std::get<InteriorClassical>(u).sigma->two_s() == 2);
  CHECK(std::get<InteriorClassical>(u).ppt_at_sigma);
  CHECK(holds<OutsideSVW>(classify({3, 0})));
  CHECK_FALSE(std::get<OutsideSVW>(classify({3, 0})).q_positive);
  CHECK(classification_tag(classify({0, 0})) == "interior_classical");
  CHECK(classification_tag(classify(kVertexS)) == "super_quantum");
}

TEST_CASE("interior points deep near V need large spins") {
  const auto c = classify({0, -5.9}, TwiceSpin(20));
  REQUIRE(holds<InteriorClassical>(c));
  CHECK_FALSE(std::get<InteriorClassical>(c).sigma.has_value());
}

TEST_CASE("segment sampling") {
  const auto one = sample_segment_sv(1);
  REQUIRE(one.size() == 1);
  check_point(one[0], -1.5, 3);
  for (const auto& p : sample_segment_sv(20)) {
    CHECK(p.beta > -6);
    CHECK(holds<SuperQuantum>(classify(p)));
  }
}
