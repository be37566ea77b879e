#include "cbsg/polygon.hpp"

#include <algorithm>

namespace cbsg {

bool ConvexPolygon::contains(const Vec2Q& p) const {
    for (const auto& h : half_planes)
        if (!h.contains(p)) return false;
    return true;
}

bool ConvexPolygon::contains_strictly(const Vec2Q& p) const {
    for (const auto& h : half_planes)
        if (!(h.eval(p) < h.offset)) return false;
    return true;
}

std::vector<Vec2Q> convex_hull(std::vector<Vec2Q> points) {
    std::sort(points.begin(), points.end(), [](const Vec2Q& a, const Vec2Q& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2) return points;

    // Monotone chain with strict turns, so collinear middle points are dropped.
    std::vector<Vec2Q> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]).sign() <= 0) --k;
        hull[k++] = points[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]).sign() <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

ConvexPolygon normalize_polygon(const std::vector<Vec2Q>& points) {
    for (const auto& p : points)
        if (p.x.sign() < 0 || p.y.sign() < 0)
            throw OutOfQuadrant("polygon vertex " + p.str() + " outside the first quadrant");
    if (points.size() < 3) throw NotAConvexBody("polygon needs at least three points");

    std::vector<Vec2Q> hull = convex_hull(points);
    if (hull.size() < 3) throw NotAConvexBody("degenerate hull (point or segment)");

    // Canonical start: lexicographically smallest vertex.
    auto start = std::min_element(hull.begin(), hull.end(), [](const Vec2Q& a, const Vec2Q& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::rotate(hull.begin(), start, hull.end());

    ConvexPolygon poly;
    poly.vertices = std::move(hull);
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        const Vec2Q& v = poly.vertices[i];
        const Vec2Q& w = poly.vertices[(i + 1) % poly.vertices.size()];
        Vec2Q e = w - v;
        // Interior lies left of each ccw edge: cross(e, p - v) >= 0, rewritten
        // as (e.y, -e.x)·p <= (e.y, -e.x)·v with a primitive integer normal.
        LatticePoint normal = primitive_signed({e.y, -e.x});
        HalfPlane h{normal, Rational(normal.x) * v.x + Rational(normal.y) * v.y};
        poly.half_planes.push_back(std::move(h));
    }
    return poly;
}

ConvexPolygon reflect_xy(const ConvexPolygon& poly) {
    std::vector<Vec2Q> pts;
    pts.reserve(poly.vertices.size());
    for (const auto& v : poly.vertices) pts.push_back(reflect_xy(v));
    return normalize_polygon(pts);
}

}  // namespace cbsg
