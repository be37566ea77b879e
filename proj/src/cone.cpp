#include "cbsg/cone.hpp"

namespace cbsg {

LatticePoint Cone::dir1() const {
    if (!tau1.direction) throw NotAffine("extremal ray tau1 has an irrational tangent direction");
    return *tau1.direction;
}

LatticePoint Cone::dir2() const {
    if (!tau2.direction) throw NotAffine("extremal ray tau2 has an irrational tangent direction");
    return *tau2.direction;
}

Rational Cone::form1(const Vec2Q& a) const {
    LatticePoint u = dir1();
    return Rational(u.y) * a.x - Rational(u.x) * a.y;
}

Rational Cone::form2(const Vec2Q& a) const {
    LatticePoint u = dir2();
    return Rational(u.x) * a.y - Rational(u.y) * a.x;
}

RayHit body_ray_intersection(const Body& body, const Vec2Q& dir) {
    if (dir.is_origin() || dir.x.sign() < 0 || dir.y.sign() < 0)
        throw Error("body_ray_intersection: ray direction must be nonzero in the first quadrant");
    RayHit hit;
    if (is_circle(body)) {
        const auto& c = as_circle(body);
        // |t·dir − c|^2 <= r^2 as a quadratic in t.
        Rational qa = norm2(dir);
        Rational qb = Rational(-2) * dot(dir, c.center);
        Rational qc = c.origin_power();
        Rational disc = qb * qb - Rational(4) * qa * qc;
        if (disc.sign() < 0) return hit;
        Surd lo(-qb / (Rational(2) * qa), Rational(-1) / (Rational(2) * qa), disc);
        Surd hi(-qb / (Rational(2) * qa), Rational(1) / (Rational(2) * qa), disc);
        if (hi.sign() < 0) return hit;
        if (lo.sign() < 0) lo = Surd(Rational(0));
        hit.kind = compare(lo, hi) == 0 ? RayHit::Point : RayHit::Segment;
        hit.lo = lo;
        hit.hi = hi;
        return hit;
    }
    const auto& poly = as_polygon(body);
    // t·(n·dir) <= b per edge.
    std::optional<Rational> lo, hi;
    for (const auto& h : poly.half_planes) {
        Rational nd = Rational(h.normal.x) * dir.x + Rational(h.normal.y) * dir.y;
        int s = nd.sign();
        if (s == 0) {
            if (h.offset.sign() < 0) return hit;
            continue;
        }
        Rational bound = h.offset / nd;
        if (s > 0) {
            if (!hi || bound < *hi) hi = bound;
        } else {
            if (!lo || bound > *lo) lo = bound;
        }
    }
    Rational lo_v = lo ? max(*lo, Rational(0)) : Rational(0);
    if (!hi) throw InternalError("body_ray_intersection: polygon must bound the ray");
    if (lo_v > *hi) return hit;
    hit.kind = lo_v == *hi ? RayHit::Point : RayHit::Segment;
    hit.lo = Surd(lo_v);
    hit.hi = Surd(*hi);
    return hit;
}

namespace {

Ray reflect_ray(const Ray& r) {
    Ray out;
    if (r.direction) out.direction = reflect_xy(*r.direction);
    if (std::holds_alternative<PointContact>(r.contact)) {
        const auto& pc = std::get<PointContact>(r.contact);
        out.contact = PointContact{reflect_xy(pc.point), pc.sigma};
    } else {
        out.contact = r.contact;  // sigma parameters are reflection-invariant
    }
    return out;
}

// Extremal ray of smallest slope for a circle whose origin power is positive.
Ray circle_low_ray(const RationalCircle& c) {
    const Rational& cx = c.center.x;
    const Rational& cy = c.center.y;
    Ray ray;
    if (cy < c.radius) {
        // The disk reaches the x-axis line: the axis is extremal, contact is a chord.
        Rational h2 = c.radius2() - cy * cy;
        Surd x_lo(cx, Rational(-1), h2);
        Surd x_hi(cx, Rational(1), h2);
        if (x_hi.sign() <= 0)
            throw UnsupportedGeometry("disk reaches the x-axis only at nonpositive x");
        if (x_lo.sign() <= 0)
            throw InternalError("axis chord spans the origin with positive origin power");
        ray.direction = LatticePoint{1, 0};
        ray.contact = SegmentContact{x_lo, x_hi};
        return ray;
    }
    if (cy == c.radius) {
        if (cx.sign() <= 0) throw UnsupportedGeometry("disk tangent to the x-axis at x <= 0");
        ray.direction = LatticePoint{1, 0};
        ray.contact = PointContact{Vec2Q{cx, Rational(0)}, cx};
        return ray;
    }
    // Disk strictly above the x-axis: the low tangent ray from the origin.
    if (cx.sign() <= 0)
        throw UnsupportedGeometry("disk above the x-axis centered at x <= 0; extremal ray is not a tangent");
    Rational a = c.origin_power();
    auto s = a.sqrt_exact();
    if (!s) {
        ray.contact = IrrationalTangent{};
        return ray;
    }
    // Tangent point (s^2 c - r s c_perp) / |c|^2 with c_perp the ccw rotation.
    Vec2Q cperp = perp_ccw(c.center);
    Rational inv = Rational(1) / c.center_norm2();
    Vec2Q t = inv * ((*s * *s) * c.center - (c.radius * *s) * cperp);
    if (t.x.sign() <= 0 || t.y.sign() <= 0)
        throw UnsupportedGeometry("tangent contact leaves the open quadrant");
    LatticePoint dir = primitive_vector(t);
    Rational sigma = dir.x != 0 ? t.x / Rational(dir.x) : t.y / Rational(dir.y);
    ray.direction = dir;
    ray.contact = PointContact{t, sigma};
    return ray;
}

Cone cone_of_circle(const RationalCircle& c) {
    // Simplicial iff the disk meets the quadrant with interior: compare the
    // squared distance from the center to the quadrant with r^2.
    Vec2Q clamped{max(c.center.x, Rational(0)), max(c.center.y, Rational(0))};
    if (norm2(c.center - clamped) >= c.radius2())
        throw NotSimplicial("circle meets the quadrant in at most one point");
    if (c.origin_power().sign() <= 0)
        throw UnsupportedGeometry("origin inside the closed disk");

    Cone cone;
    cone.tau2 = circle_low_ray(c);
    RationalCircle reflected(reflect_xy(c.center), c.radius);
    cone.tau1 = reflect_ray(circle_low_ray(reflected));
    if (cone.tau1.direction && cone.tau2.direction &&
        cross(*cone.tau2.direction, *cone.tau1.direction) <= 0)
        throw InternalError("extremal rays out of slope order");
    return cone;
}

Ray polygon_ray(const ConvexPolygon& poly, bool want_max_slope) {
    const Vec2Q* best = nullptr;
    for (const auto& v : poly.vertices) {
        if (v.is_origin()) continue;
        if (!best) {
            best = &v;
            continue;
        }
        int side = cross(*best, v).sign();
        if ((want_max_slope && side > 0) || (!want_max_slope && side < 0)) best = &v;
    }
    if (!best) throw NotAConvexBody("polygon has no nonzero vertex");
    Ray ray;
    ray.direction = primitive_vector(*best);
    RayHit hit = body_ray_intersection(poly, Vec2Q(*ray.direction));
    if (hit.kind == RayHit::Empty) throw InternalError("extremal ray misses its own polygon");
    if (hit.kind == RayHit::Point) {
        Rational sigma = hit.lo.as_rational();
        ray.contact = PointContact{sigma * Vec2Q(*ray.direction), sigma};
    } else {
        ray.contact = SegmentContact{hit.lo, hit.hi};
    }
    return ray;
}

Cone cone_of_polygon(const ConvexPolygon& poly) {
    Cone cone;
    cone.tau1 = polygon_ray(poly, true);
    cone.tau2 = polygon_ray(poly, false);
    if (cross(*cone.tau2.direction, *cone.tau1.direction) <= 0)
        throw NotAConvexBody("polygon spans a degenerate cone");
    return cone;
}

}  // namespace

Cone cone_of(const Body& body) {
    return is_circle(body) ? cone_of_circle(as_circle(body)) : cone_of_polygon(as_polygon(body));
}

}  // namespace cbsg
