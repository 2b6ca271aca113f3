#pragma once

// Geometry of the (alpha, beta) parameter plane: the per-spin physical triangles, the
// s -> infinity triangle SVW, the partial-transpose reflection and point classification.

#include <array>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "isoqudit/isostate.hpp"

namespace isoqudit {

inline constexpr double kLineTol = 1e-9;

/// Line a + b*alpha + c*beta = 0; the physical side is a + b*alpha + c*beta >= 0.
struct EdgeLine {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double value(ParamPoint p) const { return a + b * p.alpha + c * p.beta; }
  /// Signed Euclidean distance, positive on the physical side.
  double signed_distance(ParamPoint p) const;
};

/// Solves two edge lines for their common point.
ParamPoint intersect(const EdgeLine& l1, const EdgeLine& l2);

/// vertices[0] = edges 0 & 1, vertices[1] = edges 0 & 2, vertices[2] = edges 1 & 2.
/// For the limit triangle these are S, V, W.
struct RegionTriangle {
  std::optional<TwiceSpin> s;  // nullopt for the limit triangle
  std::array<ParamPoint, 3> vertices;
  std::array<EdgeLine, 3> edges;

  bool contains(ParamPoint p, double tol = kLineTol) const;
};

ParamPoint pt_map(ParamPoint p);

RegionTriangle region_triangle(TwiceSpin s);
RegionTriangle limit_triangle();

inline const ParamPoint kVertexS{-1.5, 3.0};
inline const ParamPoint kVertexV{0.0, -6.0};
inline const ParamPoint kVertexW{1.5, 3.0};

bool in_closed_limit_triangle(ParamPoint p, double tol = kLineTol);

/// PPT test through the reflection alpha -> -alpha. Throws if p is not a state at s.
bool is_ppt(TwiceSpin s, ParamPoint p, double tol = kPhysicalTol);

struct SuperQuantum {
  std::optional<TwiceSpin> sigma;
};
struct InteriorClassical {
  std::optional<TwiceSpin> sigma;  // nullopt: fiducial spin above the cap
  bool ppt_at_sigma = false;
};
struct BoundaryVW {};
struct BoundaryWSExceptS {};
struct OutsideSVW {
  bool q_positive = false;
};

using Classification = std::variant<SuperQuantum, InteriorClassical, BoundaryVW, BoundaryWSExceptS, OutsideSVW>;

Classification classify(ParamPoint p, TwiceSpin cap = TwiceSpin(kDefaultSpinCap));
std::string_view classification_tag(const Classification& c);
std::optional<TwiceSpin> classification_sigma(const Classification& c);

double triangle_area(const RegionTriangle& t);
double area_fraction(TwiceSpin s);

/// Area of region_triangle(s) intersected with its reflection, over the triangle's area:
/// the PPT share of the states at spin s.
double ppt_area_fraction(TwiceSpin s);

/// Area of a convex polygon (shoelace).
double polygon_area(const std::vector<ParamPoint>& poly);
/// Clips a convex polygon to the physical side of a line.
std::vector<ParamPoint> clip_polygon(const std::vector<ParamPoint>& poly, const EdgeLine& line);

/// n points on [S, V) spaced uniformly in beta, starting at S.
std::vector<ParamPoint> sample_segment_sv(int n);

}  // namespace isoqudit
