#pragma once

/// Extremal rays of the positive integer cone of a body, with exact contact
/// data (the set body ∩ ray, parameterized along the primitive direction).

#include <optional>
#include <variant>

#include "cbsg/body.hpp"
#include "cbsg/surd.hpp"

namespace cbsg {

/// body ∩ ray is a single rational point sigma·dir.
struct PointContact {
    Vec2Q point;
    Rational sigma;
};

/// body ∩ ray is the segment [lo·dir, hi·dir], lo < hi (endpoints may be
/// irrational for circle/axis chords, hence Surd).
struct SegmentContact {
    Surd lo, hi;
};

/// Tangent ray from the origin whose tangent point is irrational; the ray has
/// no rational direction and the semigroup is not affine.
struct IrrationalTangent {};

using Contact = std::variant<PointContact, SegmentContact, IrrationalTangent>;

struct Ray {
    std::optional<LatticePoint> direction;  // primitive; absent for irrational tangents
    Contact contact;

    bool rational() const { return direction.has_value(); }
    bool is_point_contact() const { return std::holds_alternative<PointContact>(contact); }
    bool is_segment_contact() const { return std::holds_alternative<SegmentContact>(contact); }
    const PointContact& point_contact() const { return std::get<PointContact>(contact); }
    const SegmentContact& segment_contact() const { return std::get<SegmentContact>(contact); }
};

/// tau1 has the strictly greater slope (vertical counts as +infinity).
struct Cone {
    Ray tau1, tau2;

    LatticePoint dir1() const;
    LatticePoint dir2() const;

    /// Primitive integer forms, nonnegative exactly on the cone and zero on
    /// the respective ray: form1 vanishes on tau1, form2 on tau2.
    long long form1(const LatticePoint& a) const { return dir1().y * a.x - dir1().x * a.y; }
    long long form2(const LatticePoint& a) const { return dir2().x * a.y - dir2().y * a.x; }
    Rational form1(const Vec2Q& a) const;
    Rational form2(const Vec2Q& a) const;

    bool in_cone(const LatticePoint& a) const { return form1(a) >= 0 && form2(a) >= 0; }
    bool in_interior(const LatticePoint& a) const { return form1(a) >= 1 && form2(a) >= 1; }
    bool in_cone(const Vec2Q& a) const { return form1(a).sign() >= 0 && form2(a).sign() >= 0; }
};

/// Exact parameter range {t >= 0 : t·dir ∈ body}.
struct RayHit {
    enum Kind { Empty, Point, Segment } kind = Empty;
    Surd lo, hi;  // defined for Point (lo == hi) and Segment
};

RayHit body_ray_intersection(const Body& body, const Vec2Q& dir);

/// Extremal rays with exact contact sets. Throws NotSimplicial for circles
/// meeting the quadrant in fewer than two points, UnsupportedGeometry for
/// contact configurations outside the supported cases (including the origin
/// inside the closed disk).
Cone cone_of(const Body& body);

}  // namespace cbsg
