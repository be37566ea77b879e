#pragma once

/// Convex polygons over the rationals, with both V- and H-representations.

#include <vector>

#include "cbsg/vec.hpp"

namespace cbsg {

/// Closed half-plane {p : a·p <= b} with a primitive integer normal.
struct HalfPlane {
    LatticePoint normal;
    Rational offset;

    bool contains(const Vec2Q& p) const { return normal.x * p.x + normal.y * p.y <= offset; }
    Rational eval(const Vec2Q& p) const { return Rational(normal.x) * p.x + Rational(normal.y) * p.y; }
};

/// Vertices counterclockwise, no three collinear; half_planes is the exact
/// H-representation, one entry per edge, in the same order.
struct ConvexPolygon {
    std::vector<Vec2Q> vertices;
    std::vector<HalfPlane> half_planes;

    bool contains(const Vec2Q& p) const;
    bool contains_strictly(const Vec2Q& p) const;
    std::size_t size() const { return vertices.size(); }
};

/// Convex hull of the input with canonical ccw orientation and the
/// H-representation attached. Throws NotAConvexBody for degenerate hulls and
/// OutOfQuadrant if any input point has a negative coordinate.
ConvexPolygon normalize_polygon(const std::vector<Vec2Q>& points);

ConvexPolygon reflect_xy(const ConvexPolygon& poly);

/// Hull of a point set without the quadrant restriction (for region work).
/// Returns ccw vertices; collinear inputs yield the extreme segment or point.
std::vector<Vec2Q> convex_hull(std::vector<Vec2Q> points);

}  // namespace cbsg
