#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nadyn/errors.hpp"
#include "nadyn/localfield/poly.hpp"

namespace nadyn::newton {

struct Point {
  int index;
  mpq_class valuation;
};

struct Segment {
  mpq_class slope;
  int length;
};

/// Lower convex hull of the points (i, v(a_i)) over the nonzero coefficients.
struct NewtonPolygon {
  std::vector<Point> points;
  std::vector<Point> hull;
  std::vector<Segment> segments;

  int degree() const { return points.empty() ? -1 : points.back().index; }
};

// Points must be sorted by index with distinct indices; at least two needed.
NewtonPolygon build_polygon(std::vector<Point> points);

/// Polygon of a polynomial over a valued field. Exact zeros are skipped; a
/// coefficient only known to vanish modulo the precision cannot be placed.
template <localfield::ValuedField F>
NewtonPolygon build_polygon(const localfield::Poly<F>& g) {
  std::vector<Point> pts;
  const auto& c = g.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const localfield::Valuation v = c[i].valuation();
    if (v.is_infinite()) continue;
    if (v.is_lower_bound()) {
      throw PrecisionError("insufficient precision to place polygon point at index " + std::to_string(i));
    }
    pts.push_back(Point{static_cast<int>(i), v.bound()});
  }
  return build_polygon(std::move(pts));
}

// One entry per root in the algebraic closure: a segment of slope s and
// length L contributes L roots of valuation -s.
std::vector<mpq_class> root_valuations(const NewtonPolygon& polygon);

struct RamificationCertificate {
  int degree;
  int ramification_index;
  mpq_class slope;
};

/// Irreducibility and total ramification from a single segment whose slope,
/// in lowest terms, has denominator equal to the degree. Requires a constant
/// term and a base with value group Z; anything else is inconclusive.
std::optional<RamificationCertificate> total_ramification_certificate(const NewtonPolygon& polygon);

}  // namespace nadyn::newton
