#include <doctest.h>

#include "cbsg/oracle.hpp"
#include "corpus.hpp"

using namespace cbsg;
using namespace cbsg::testing;

TEST_CASE("brute_member on the worked bodies") {
    CHECK(brute_member(Body(worked_circle()), {4, 2}, 10));   // lands at k = 3
    CHECK_FALSE(brute_member(Body(worked_circle()), {4, 2}, 2));
    CHECK_FALSE(brute_member(Body(worked_polygon()), {13, 4}, 10));
    CHECK(brute_member(Body(worked_polygon()), {0, 0}, 0));
}

TEST_CASE("brute_min_generators reproduce the published sets") {
    auto circle_gens = brute_min_generators(Body(worked_circle()), 120);
    std::sort(circle_gens.begin(), circle_gens.end());
    Semigroup sg(worked_circle());
    CHECK(circle_gens == sg.generators().elements);

    auto poly_gens = brute_min_generators(Body(worked_polygon()), 30);
    std::sort(poly_gens.begin(), poly_gens.end());
    Semigroup psg(worked_polygon());
    CHECK(poly_gens == psg.generators().elements);
}

TEST_CASE("truncated semigroup points are all members") {
    TruncatedSemigroup trunc = TruncatedSemigroup::build(Body(worked_polygon()), 12);
    Semigroup sg(worked_polygon());
    for (const auto& p : trunc.points) CHECK(sg.member(p));
    // Conversely, members whose dilation interval opens at or below the cap
    // appear in the truncation.
    for (long long x = 0; x <= 25; ++x)
        for (long long y = 0; y <= 25; ++y) {
            LatticePoint p{x, y};
            DilationInterval iv = sg.dilation(p);
            auto k = iv.first_integer(p.is_origin() ? 0 : 1);
            if (k && *k <= trunc.cap) CHECK(trunc.contains(p));
        }
}

TEST_CASE("brute Corollary scan finds the published violation") {
    BruteDecision cm = brute_cm_check(Body(worked_polygon()), 2500, 40);
    CHECK_FALSE(cm.holds);
    REQUIRE(cm.witness.has_value());
    CHECK(*cm.witness == LatticePoint{13, 4});

    BruteDecision tri = brute_cm_check(Body(make_triangle_family(3)), 900, 60);
    CHECK(tri.holds);
}

TEST_CASE("brute Sbar scan confirms the published verdicts") {
    BruteDecision circle = brute_sbar_cm(Body(worked_circle()), 1200, 150);
    CHECK(circle.holds);
    BruteDecision poly = brute_sbar_cm(Body(worked_polygon()), 1200, 40);
    CHECK(poly.holds);
}
