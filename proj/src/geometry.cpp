#include "isoqudit/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "isoqudit/qrep.hpp"

namespace isoqudit {
namespace {

std::array<EdgeLine, 3> physical_edges(TwiceSpin s) {
  const double x = s.spin();
  return {EdgeLine{1.0, 1.0, 1.0 / 6.0},                                       //
          EdgeLine{1.0, -1.0 / x, -(2 * x + 3) / (6 * x)},                     //
          EdgeLine{1.0, -(x + 1) / x, (x + 1) * (2 * x + 3) / (6 * x * (2 * x - 1))}};
}

// s -> infinity limits of the three physical edges: SV, WS, VW.
constexpr std::array<EdgeLine, 3> kLimitEdges = {EdgeLine{1.0, 1.0, 1.0 / 6.0},  //
                                                 EdgeLine{1.0, 0.0, -1.0 / 3.0},
                                                 EdgeLine{1.0, -1.0, 1.0 / 6.0}};

RegionTriangle assemble(std::optional<TwiceSpin> s, const std::array<EdgeLine, 3>& e) {
  return {s, {intersect(e[0], e[1]), intersect(e[0], e[2]), intersect(e[1], e[2])}, e};
}

}  // namespace

double EdgeLine::signed_distance(ParamPoint p) const { return value(p) / std::hypot(b, c); }

ParamPoint intersect(const EdgeLine& l1, const EdgeLine& l2) {
  using ld = long double;
  const ld det = ld(l1.b) * l2.c - ld(l1.c) * l2.b;
  if (std::abs(det) < 1e-300L) throw std::domain_error("intersect: parallel lines");
  const ld alpha = (-ld(l1.a) * l2.c + ld(l1.c) * l2.a) / det;
  const ld beta = (-ld(l1.b) * l2.a + ld(l1.a) * l2.b) / det;
  return {static_cast<double>(alpha), static_cast<double>(beta)};
}

bool RegionTriangle::contains(ParamPoint p, double tol) const {
  for (const auto& e : edges)
    if (e.signed_distance(p) < -tol) return false;
  return true;
}

ParamPoint pt_map(ParamPoint p) { return {-p.alpha, p.beta}; }

RegionTriangle region_triangle(TwiceSpin s) {
  if (s.two_s() < 2) throw std::invalid_argument("region_triangle: needs s >= 1");
  return assemble(s, physical_edges(s));
}

RegionTriangle limit_triangle() { return assemble(std::nullopt, kLimitEdges); }

bool in_closed_limit_triangle(ParamPoint p, double tol) {
  for (const auto& e : kLimitEdges)
    if (e.signed_distance(p) < -tol) return false;
  return true;
}

bool is_ppt(TwiceSpin s, ParamPoint p, double tol) {
  if (!is_physical(s, p, tol)) throw std::domain_error("is_ppt: point is not a state at this spin");
  return is_physical(s, pt_map(p), tol);
}

Classification classify(ParamPoint p, TwiceSpin cap) {
  const auto& sv = kLimitEdges[0];
  const auto& ws = kLimitEdges[1];
  const auto& vw = kLimitEdges[2];

  const bool on_sv = std::abs(sv.signed_distance(p)) <= kLineTol;
  if (on_sv && p.beta > kVertexV.beta && p.beta <= kVertexS.beta + kLineTol)
    return SuperQuantum{fiducial_spin(p, cap)};

  const bool beta_in_span = p.beta >= kVertexV.beta - kLineTol && p.beta <= kVertexW.beta + kLineTol;
  if (std::abs(vw.signed_distance(p)) <= kLineTol && beta_in_span) return BoundaryVW{};

  if (std::abs(ws.signed_distance(p)) <= kLineTol && p.alpha > kVertexS.alpha && p.alpha < kVertexW.alpha)
    return BoundaryWSExceptS{};

  bool interior = true;
  for (const auto& e : kLimitEdges)
    if (e.signed_distance(p) <= kLineTol) interior = false;
  if (interior) {
    const auto sigma = fiducial_spin(p, cap);
    const bool ppt = sigma ? is_ppt(*sigma, p) : false;
    return InteriorClassical{sigma, ppt};
  }
  return OutsideSVW{q_positive(p)};
}

std::string_view classification_tag(const Classification& c) {
  struct Visitor {
    std::string_view operator()(const SuperQuantum&) const { return "super_quantum"; }
    std::string_view operator()(const InteriorClassical&) const { return "interior_classical"; }
    std::string_view operator()(const BoundaryVW&) const { return "boundary_vw"; }
    std::string_view operator()(const BoundaryWSExceptS&) const { return "boundary_ws"; }
    std::string_view operator()(const OutsideSVW&) const { return "outside_svw"; }
  };
  return std::visit(Visitor{}, c);
}

std::optional<TwiceSpin> classification_sigma(const Classification& c) {
  if (const auto* sq = std::get_if<SuperQuantum>(&c)) return sq->sigma;
  if (const auto* ic = std::get_if<InteriorClassical>(&c)) return ic->sigma;
  return std::nullopt;
}

double polygon_area(const std::vector<ParamPoint>& poly) {
  long double twice = 0.0L;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    twice += static_cast<long double>(p.alpha) * q.beta - static_cast<long double>(q.alpha) * p.beta;
  }
  return static_cast<double>(0.5L * std::abs(twice));
}

double triangle_area(const RegionTriangle& t) {
  return polygon_area({t.vertices.begin(), t.vertices.end()});
}

double area_fraction(TwiceSpin s) { return triangle_area(region_triangle(s)) / triangle_area(limit_triangle()); }

std::vector<ParamPoint> clip_polygon(const std::vector<ParamPoint>& poly, const EdgeLine& line) {
  std::vector<ParamPoint> out;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % n];
    const double vp = line.value(p);
    const double vq = line.value(q);
    if (vp >= 0) out.push_back(p);
    if ((vp >= 0) != (vq >= 0)) {
      const double t = vp / (vp - vq);
      out.push_back({p.alpha + t * (q.alpha - p.alpha), p.beta + t * (q.beta - p.beta)});
    }
  }
  return out;
}

double ppt_area_fraction(TwiceSpin s) {
  const auto tri = region_triangle(s);
  std::vector<ParamPoint> poly(tri.vertices.begin(), tri.vertices.end());
  for (const auto& e : tri.edges) poly = clip_polygon(poly, EdgeLine{e.a, -e.b, e.c});
  return polygon_area(poly) / triangle_area(tri);
}

std::vector<ParamPoint> sample_segment_sv(int n) {
  if (n < 1) throw std::invalid_argument("sample_segment_sv: n must be positive");
  std::vector<ParamPoint> pts;
  pts.reserve(n);
  const double span = kVertexS.beta - kVertexV.beta;
  for (int k = 0; k < n; ++k) {
    const double beta = kVertexS.beta - span * k / n;
    pts.push_back({-1.0 - beta / 6.0, beta});
  }
  return pts;
}

}  // namespace isoqudit
