#include <doctest.h>

#include <random>

#include "cbsg/oracle.hpp"
#include "corpus.hpp"

using namespace cbsg;
using namespace cbsg::testing;

TEST_CASE("dilation interval of the worked circle at (4,2) is [5/2, 25/8]") {
    // 16k^2 - 90k + 125 <= 0 has roots 5/2 and 25/8.
    DilationInterval iv = dilation_interval(worked_circle(), {4, 2});
    REQUIRE(!iv.empty);
    CHECK(compare(iv.lo, Surd(Rational(5, 2))) == std::strong_ordering::equal);
    CHECK(compare(*iv.hi, Surd(Rational(25, 8))) == std::strong_ordering::equal);
    CHECK(*iv.first_integer(1) == 3);
}

TEST_CASE("dilation interval at the origin contains exactly 0") {
    for (Body body : {Body(worked_circle()), Body(worked_polygon())}) {
        DilationInterval iv = dilation_interval(body, {0, 0});
        REQUIRE(!iv.empty);
        CHECK(iv.lo.sign() == 0);
        REQUIRE(iv.hi.has_value());
        CHECK(iv.hi->sign() == 0);
    }
}

TEST_CASE("worked polygon: (13,4) has no admissible dilation") {
    DilationInterval iv = dilation_interval(worked_polygon(), {13, 4});
    if (!iv.empty) CHECK(!iv.first_integer(1).has_value());
    CHECK_FALSE(body_member(worked_polygon(), {13, 4}));
}

TEST_CASE("degenerate circle branches of the dilation interval") {
    // Origin on the circle: the quadratic degenerates to a linear condition.
    RationalCircle on_circle(qp(3, 1, 4, 1), Rational(5));
    DilationInterval iv = dilation_interval(Body(on_circle), {1, 1});
    REQUIRE(!iv.empty);
    CHECK(!iv.hi.has_value());
    CHECK(compare(iv.lo, Surd(Rational(1, 7))) == std::strong_ordering::equal);  // |P|^2/(2 P.c)

    RationalCircle on_axis(qp(5, 1, 0, 1), Rational(5));
    CHECK(dilation_interval(Body(on_axis), {0, 1}).empty);

    // Origin interior: the interval is an unbounded ray [k+, inf).
    RationalCircle around(qp(1, 1, 1, 1), Rational(2));
    DilationInterval tail = dilation_interval(Body(around), {5, 0});
    REQUIRE(!tail.empty);
    CHECK(!tail.hi.has_value());
    for (long long k = 1; k <= 60; ++k) {
        Rational dx = Rational(5) - Rational(k), dy = Rational(-k);
        bool in = dx * dx + dy * dy <= Rational(4 * k * k);
        bool iv_says = compare(Surd(Rational(k)), tail.lo) >= 0;
        CHECK(in == iv_says);
    }
}

TEST_CASE("membership examples from the worked bodies") {
    Semigroup circle(worked_circle());
    CHECK_FALSE(circle.member({2, 1}));
    CHECK_FALSE(circle.member({3, 2}));
    CHECK(circle.member({4, 2}));
    CHECK(circle.member({0, 0}));

    Semigroup poly(worked_polygon());
    CHECK_FALSE(poly.member({13, 4}));
    CHECK(poly.member({31, 13}));  // (13,4) + (18,9)
    CHECK(poly.member({0, 0}));
}

TEST_CASE("member agrees with the brute oracle on a small window") {
    for (const auto& entry : full_corpus()) {
        const Semigroup& sg = *entry.sg;
        CAPTURE(entry.name);
        long long cap = 0;
        std::vector<LatticePoint> pts;
        for (long long x = 0; x <= 20; ++x)
            for (long long y = 0; y <= 20; ++y) {
                LatticePoint p{x, y};
                if (norm2(p) > 400) continue;
                pts.push_back(p);
                DilationInterval iv = sg.dilation(p);
                if (!iv.empty && iv.hi) cap = std::max(cap, to_int64(iv.hi->ceil()));
            }
        cap += 1;
        for (const auto& p : pts) CHECK(sg.member(p) == brute_member(sg.body(), p, cap));
    }
}

TEST_CASE("Sbar membership on the worked examples") {
    Semigroup circle(worked_circle());
    CHECK(circle.member_sbar({2, 1}));
    CHECK(circle.member_sbar({3, 2}));

    Semigroup poly(worked_polygon());
    CHECK(poly.member_sbar({13, 4}));
}

TEST_CASE("S is contained in Sbar and Sbar absorbs S") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> coord(0, 30);
    Semigroup sg(worked_circle());
    int absorbed = 0;
    for (int i = 0; i < 300; ++i) {
        LatticePoint a{coord(rng), coord(rng)};
        if (sg.member(a)) CHECK(sg.member_sbar(a));
        if (sg.member_sbar(a)) {
            CHECK(sg.cone().in_cone(a));  // Sbar sits inside the cone
            LatticePoint s{4, 2};         // a known member
            CHECK(sg.member_sbar(a + s));
            ++absorbed;
        }
    }
    CHECK(absorbed > 0);
}

TEST_CASE("ray semigroups of the worked circle in Sbar are single-generated") {
    Semigroup sg(worked_circle());
    const RaySemigroup& r1 = sg.ray(1, true);
    const RaySemigroup& r2 = sg.ray(2, true);
    CHECK(r1.single_generator);
    CHECK(r1.generator == LatticePoint{32, 24});
    CHECK(r2.single_generator);
    CHECK(r2.generator == LatticePoint{96, 40});
}

TEST_CASE("point-contact rays: S and Sbar agree multiple by multiple") {
    for (const auto& entry : full_corpus()) {
        const Semigroup& sg = *entry.sg;
        for (int which : {1, 2}) {
            const Ray& ray = which == 1 ? sg.cone().tau1 : sg.cone().tau2;
            if (!ray.is_point_contact()) continue;
            CAPTURE(entry.name);
            CAPTURE(which);
            const RaySemigroup& rs = sg.ray(which, false);
            const RaySemigroup& rb = sg.ray(which, true);
            long long window = std::max(rs.tail_start + rs.period, rb.tail_start + rb.period) + 5;
            for (long long s = 1; s <= window; ++s) CHECK(rs.member_s(s) == rb.member_s(s));
        }
    }
}

TEST_CASE("segment-contact ray prefixes agree with per-multiple membership") {
    Semigroup sg(strip_figure_polygon());
    for (int which : {1, 2}) {
        const RaySemigroup& r = sg.ray(which, false);
        long long window = r.tail_start + std::max<long long>(r.period, 8);
        for (long long s = 1; s <= window; ++s)
            CHECK(r.member_s(s) == sg.member(s * r.primitive));
    }
}

TEST_CASE("dilation endpoints scale linearly along a fixed ray") {
    Semigroup sg(worked_circle());
    LatticePoint p = sg.cone().dir1();
    DilationInterval base = sg.dilation(p);
    for (long long s = 2; s <= 9; ++s) {
        DilationInterval iv = sg.dilation(s * p);
        REQUIRE(!iv.empty);
        CHECK(compare(iv.lo, Surd(Rational(s)) * base.lo) == std::strong_ordering::equal);
        CHECK(compare(*iv.hi, Surd(Rational(s)) * *base.hi) == std::strong_ordering::equal);
    }
}
