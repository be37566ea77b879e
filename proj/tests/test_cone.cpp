#include <doctest.h>

#include "corpus.hpp"

using namespace cbsg;
using namespace cbsg::testing;

TEST_CASE("worked circle: tangent contacts match the published footnote") {
    Cone cone = cone_of(worked_circle());
    REQUIRE(cone.tau1.is_point_contact());
    REQUIRE(cone.tau2.is_point_contact());
    CHECK(cone.tau1.point_contact().point == qp(32, 25, 24, 25));
    CHECK(cone.tau2.point_contact().point == qp(96, 65, 8, 13));
    CHECK(cone.dir1() == LatticePoint{4, 3});
    CHECK(cone.dir2() == LatticePoint{12, 5});
}

TEST_CASE("worked polygon: contacts are the slope-extreme vertices") {
    ConvexPolygon poly = worked_polygon();
    Cone cone = cone_of(poly);
    // Oracle: exhaustive slope comparison over the vertices.
    Vec2Q best_hi = poly.vertices[0], best_lo = poly.vertices[0];
    for (const auto& v : poly.vertices) {
        if (cross(best_hi, v).sign() > 0) best_hi = v;
        if (cross(best_lo, v).sign() < 0) best_lo = v;
    }
    CHECK(best_hi == qp(18, 5, 9, 5));
    CHECK(best_lo == qp(18, 5, 3, 5));
    REQUIRE(cone.tau1.is_point_contact());
    REQUIRE(cone.tau2.is_point_contact());
    CHECK(cone.tau1.point_contact().point == best_hi);
    CHECK(cone.tau2.point_contact().point == best_lo);
}

TEST_CASE("axis-crossing circle: chord contact with surd endpoints") {
    // Center (2,1/2), radius 1 crosses the x-axis; solving
    // (x-2)^2 + (1/2)^2 = 1 gives x = 2 +- sqrt(3)/2.
    RationalCircle c(qp(2, 1, 1, 2), Rational(1));
    Cone cone = cone_of(c);
    CHECK(cone.dir2() == LatticePoint{1, 0});
    REQUIRE(cone.tau2.is_segment_contact());
    const auto& seg = cone.tau2.segment_contact();
    Surd lo(Rational(2), Rational(-1, 2), Rational(3));
    Surd hi(Rational(2), Rational(1, 2), Rational(3));
    CHECK(compare(seg.lo, lo) == std::strong_ordering::equal);
    CHECK(compare(seg.hi, hi) == std::strong_ordering::equal);
    // The other tangent is irrational: |c'|^2 - r^2 = 13/4 is not a square.
    CHECK_FALSE(cone.tau1.rational());
    CHECK_THROWS_AS(cone.dir1(), NotAffine);
}

TEST_CASE("degenerate circles are rejected") {
    CHECK_THROWS_AS(cone_of(RationalCircle(qp(-3, 1, -3, 1), Rational(1))), NotSimplicial);
    CHECK_THROWS_AS(cone_of(RationalCircle(qp(-2, 1, 1, 1), Rational(2))), NotSimplicial);
    // Origin strictly inside the closed disk.
    CHECK_THROWS_AS(cone_of(RationalCircle(qp(1, 1, 1, 1), Rational(2))), UnsupportedGeometry);
    // Disk above the x-axis centered left of the y-axis: not a tangent case.
    CHECK_THROWS_AS(cone_of(RationalCircle(qp(-1, 10, 10, 1), Rational(1))), UnsupportedGeometry);
}

TEST_CASE("cone_of is reflection-equivariant on the corpus") {
    for (const auto& entry : full_corpus()) {
        const Body& body = entry.sg->body();
        Cone cone = entry.sg->cone();
        Cone rcone = cone_of(reflect_xy(body));
        CAPTURE(entry.name);
        CHECK(rcone.dir1() == reflect_xy(cone.dir2()));
        CHECK(rcone.dir2() == reflect_xy(cone.dir1()));
        // Contact types swap sides; point contacts map pointwise.
        CHECK(rcone.tau1.is_point_contact() == cone.tau2.is_point_contact());
        CHECK(rcone.tau2.is_point_contact() == cone.tau1.is_point_contact());
        if (cone.tau1.is_point_contact())
            CHECK(rcone.tau2.point_contact().point == reflect_xy(cone.tau1.point_contact().point));
        if (cone.tau2.is_point_contact())
            CHECK(rcone.tau1.point_contact().point == reflect_xy(cone.tau2.point_contact().point));
    }
}

TEST_CASE("body_ray_intersection: polygon extremal ray touches one vertex") {
    ConvexPolygon poly = worked_polygon();
    RayHit hit = body_ray_intersection(poly, Vec2Q{Rational(2), Rational(1)});
    REQUIRE(hit.kind == RayHit::Point);
    CHECK(hit.lo.as_rational() == Rational(9, 5));  // 9/5 * (2,1) = (18/5, 9/5)

    RayHit miss = body_ray_intersection(poly, Vec2Q{Rational(0), Rational(1)});
    CHECK(miss.kind == RayHit::Empty);
}

TEST_CASE("body_ray_intersection: circle chord parameters solve the quadratic") {
    RationalCircle c = worked_circle();
    Vec2Q dir{Rational(2), Rational(1)};
    RayHit hit = body_ray_intersection(Body(c), dir);
    REQUIRE(hit.kind == RayHit::Segment);
    // Both endpoints satisfy |t*dir - c|^2 = r^2 exactly after squaring.
    for (const Surd* t : {&hit.lo, &hit.hi}) {
        Surd dx = *t * Surd(dir.x) - Surd(c.center.x);
        Surd dy = *t * Surd(dir.y) - Surd(c.center.y);
        Surd lhs = dx * dx + dy * dy;
        CHECK(compare(lhs, Surd(c.radius2())) == std::strong_ordering::equal);
    }
    // Oracle: a brute dilation scan of lattice points on that ray agrees with
    // the k-interval derived from these parameters (k in [s/hi, s/lo]).
    for (long long s = 1; s <= 12; ++s) {
        bool interval_says = !integers_in_interval(Surd(Rational(s)) / hit.hi,
                                                   Surd(Rational(s)) / hit.lo, 1)
                                  .empty();
        bool brute = false;
        for (long long k = 1; k <= 40 && !brute; ++k) {
            Rational dx = Rational(2 * s) - Rational(k) * c.center.x;
            Rational dy = Rational(s) - Rational(k) * c.center.y;
            brute = dx * dx + dy * dy <= Rational(k * k) * c.radius2();
        }
        CHECK(interval_says == brute);
    }
}
