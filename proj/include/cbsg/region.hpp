#pragma once

/// Bounded rational regions and exact lattice-point enumeration.

#include <vector>

#include "cbsg/vec.hpp"

namespace cbsg {

/// {p : normal·p <= offset}, or strict inequality when `strict` is set.
struct Constraint {
    LatticePoint normal;
    Rational offset;
    bool strict = false;
};

struct LatticeRegion {
    std::vector<Constraint> constraints;

    void add(LatticePoint normal, Rational offset, bool strict = false) {
        constraints.push_back({normal, std::move(offset), strict});
    }
    /// Half-plane on the side of `inside` relative to the line through `p`
    /// with direction `dir` (which must not pass through `inside`).
    void add_side(const Vec2Q& p, const Vec2Q& dir, const Vec2Q& inside, bool strict = false);

    bool contains(const Vec2Q& p) const;

    /// Region bounded by the hull of `points` (>= 3 extreme points required);
    /// `open` makes every edge strict, i.e. the topological interior.
    static LatticeRegion hull_region(const std::vector<Vec2Q>& points, bool open = false);
};

/// Exactly the integer points of the region in lexicographic (x, y) order.
/// Throws Unbounded when the region is nonempty and unbounded.
std::vector<LatticePoint> enumerate_lattice(const LatticeRegion& region);

/// Lattice points on a closed rational segment (endpoints may coincide).
std::vector<LatticePoint> lattice_points_on_segment(const Vec2Q& a, const Vec2Q& b);

struct LineQ {
    Vec2Q point;
    Vec2Q dir;
};

/// Intersection point of two lines; throws NoIntersection if parallel.
Vec2Q line_intersection(const LineQ& l1, const LineQ& l2);

/// The segment i·[a, b].
std::pair<Vec2Q, Vec2Q> scaled_segment(long long i, const std::pair<Vec2Q, Vec2Q>& seg);

/// Intersection of two closed rational segments, empty/point/segment.
struct SegmentMeet {
    bool empty = true;
    Vec2Q lo, hi;  // equal for a single point
};
SegmentMeet segments_intersect(const Vec2Q& a1, const Vec2Q& b1, const Vec2Q& a2, const Vec2Q& b2);

}  // namespace cbsg
