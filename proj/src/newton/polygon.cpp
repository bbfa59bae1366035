#include "nadyn/newton/polygon.hpp"

#include <algorithm>

namespace nadyn::newton {

namespace {

// Cross product sign of (b - a) x (c - a); <= 0 means b lies on or above
// the segment from a to c.
mpq_class turn(const Point& a, const Point& b, const Point& c) {
  mpq_class abx = b.index - a.index, aby = b.valuation - a.valuation;
  mpq_class acx = c.index - a.index, acy = c.valuation - a.valuation;
  return abx * acy - aby * acx;
}

}  // namespace

NewtonPolygon build_polygon(std::vector<Point> points) {
  if (points.size() < 2) throw UsageError("Newton polygon needs at least two nonzero coefficients");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].index <= points[i - 1].index) throw UsageError("polygon points must have increasing indices");
  }
  NewtonPolygon poly;
  poly.points = points;
  std::vector<Point>& hull = poly.hull;
  for (const auto& pt : points) {
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const int len = hull[i].index - hull[i - 1].index;
    mpq_class slope = (hull[i].valuation - hull[i - 1].valuation) / len;
    slope.canonicalize();
    poly.segments.push_back(Segment{slope, len});
  }
  return poly;
}

std::vector<mpq_class> root_valuations(const NewtonPolygon& polygon) {
  std::vector<mpq_class> out;
  for (const auto& seg : polygon.segments) {
    for (int k = 0; k < seg.length; ++k) out.push_back(-seg.slope);
  }
  return out;
}

std::optional<RamificationCertificate> total_ramification_certificate(const NewtonPolygon& polygon) {
  if (polygon.segments.size() != 1) return std::nullopt;
  if (polygon.points.front().index != 0) return std::nullopt;
  for (const auto& pt : polygon.points) {
    if (pt.valuation.get_den() != 1) return std::nullopt;
  }
  const int n = polygon.points.back().index;
  const mpq_class& slope = polygon.segments.front().slope;
  if (slope.get_den() != n) return std::nullopt;
  return RamificationCertificate{n, n, slope};
}

}  // namespace nadyn::newton
