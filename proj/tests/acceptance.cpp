// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are exact (set equality) except the stated wall-clock
// budgets.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "cbsg/circle_semigroup.hpp"
#include "cbsg/oracle.hpp"
#include "cbsg/region.hpp"
#include "corpus.hpp"

using namespace cbsg;
using namespace cbsg::testing;

namespace {

int g_failures = 0;

struct Criterion {
    std::string name;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream notes;

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << "  FAILED: " << what << "\n";
        }
    }
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    void finish(double budget_s = 0) {
        double t = seconds();
        if (budget_s > 0 && t > budget_s) {
            ok = false;
            notes << "  FAILED: runtime " << t << "s exceeds " << budget_s << "s\n";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "  (" << t << "s)\n" << notes.str();
        if (!ok) ++g_failures;
    }
};

std::vector<LatticePoint> sorted(std::vector<LatticePoint> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::string show(const std::vector<LatticePoint>& v) {
    std::ostringstream os;
    for (const auto& p : v) os << p << " ";
    return os.str();
}

long long certified_cap(const Semigroup& sg, long long max_x, long long max_y) {
    long long cap = 1;
    for (long long x = 0; x <= max_x; ++x)
        for (long long y = 0; y <= max_y; ++y) {
            DilationInterval iv = sg.dilation({x, y});
            if (!iv.empty && iv.hi) cap = std::max(cap, to_int64(iv.hi->ceil()));
        }
    return cap + 1;
}

void criterion1_circle_example() {
    Criterion c("criterion 1: worked circle reproduction");
    Semigroup sg(worked_circle());
    const std::vector<LatticePoint> expected{
        {4, 2},   {5, 3},   {6, 3},   {6, 4},   {7, 3},   {7, 4},   {7, 5},
        {8, 5},   {9, 4},   {9, 6},   {10, 7},  {11, 8},  {15, 11}, {19, 8},
        {19, 14}, {23, 17}, {27, 20}, {31, 13}, {31, 23}, {32, 24}, {35, 26},
        {43, 18}, {55, 23}, {67, 28}, {79, 33}, {91, 38}, {96, 40}};
    c.require(sg.generators().elements == expected, "27-element minimal generating set");
    c.require(circle_interior_gaps(sg) == std::vector<LatticePoint>{{2, 1}, {3, 2}},
              "interior gaps {(2,1),(3,2)}");
    CircleBuchsbaumCertificate cert = circle_is_buchsbaum(sg);
    c.require(cert.ray1.generator == LatticePoint{32, 24} && cert.ray1.single_generator,
              "Sbar ray 1 generated by (32,24)");
    c.require(cert.ray2.generator == LatticePoint{96, 40} && cert.ray2.single_generator,
              "Sbar ray 2 generated by (96,40)");
    c.require(cert.verdict, "Buchsbaum verdict true");
    c.finish(5.0);
}

void criterion2_polygon_example() {
    Criterion c("criterion 2: worked polygon reproduction");
    Semigroup sg(worked_polygon());
    c.require(sg.generators().elements ==
                  sorted({{4, 1}, {7, 2}, {7, 3}, {8, 3}, {10, 3}, {11, 2}, {11, 5}, {14, 3},
                          {18, 3}, {18, 9}, {20, 8}, {23, 10}}),
              "12-element minimal generating set");
    GapComparison comp = polygon_gap_comparison(sg);
    c.require(comp.apex_gaps == std::vector<LatticePoint>{{13, 4}},
              "apex-region gap set exactly {(13,4)}");
    c.require(sg.member_sbar({13, 4}), "(13,4) lies in Sbar");
    const std::vector<LatticePoint> wedge_expected{
        {3, 1},  {5, 1},  {5, 2},  {6, 2},  {9, 2},  {10, 2}, {9, 3},  {13, 3},
        {16, 3}, {17, 3}, {9, 4},  {10, 4}, {17, 4}, {12, 5}, {13, 5}, {13, 6}};
    c.require(sorted(comp.wedge_gaps) == sorted(wedge_expected),
              "wedge gap set equals the published 16 points, got " + show(comp.wedge_gaps));
    c.require(sorted(comp.wedge_sbar_gaps) == sorted(wedge_expected),
              "none of the wedge gaps lies in Sbar");
    CohenMacaulayResult cm = polygon_is_cohen_macaulay(sg);
    c.require(!cm.cohen_macaulay && cm.witness && *cm.witness == LatticePoint{13, 4},
              "not Cohen-Macaulay with witness (13,4)");
    c.require(polygon_is_buchsbaum(sg).verdict, "Buchsbaum verdict true");
    c.finish(5.0);
}

void criterion3_strip_figure() {
    Criterion c("criterion 3: strip-figure reproduction");
    Semigroup sg(strip_figure_polygon());
    PolygonGaps gaps = polygon_interior_gaps(sg);
    c.require(gaps.finite == std::vector<LatticePoint>{{4, 1}, {7, 3}},
              "interior gaps exactly {(4,1),(7,3)}, got " + show(gaps.finite));
    c.require(gaps.strip_reps1.empty() && gaps.strip_reps2.empty(), "no strip gap cells");
    c.require(polygon_gap_comparison(sg).equal, "int(cone) equals int(Sbar)");
    c.require(polygon_is_buchsbaum(sg).verdict, "Buchsbaum verdict true");
    c.finish(0);
}

void criterion4_families() {
    Criterion c("criterion 4: guaranteed-Buchsbaum families");
    Semigroup fig(aligned_quad_figure());
    c.require(polygon_is_buchsbaum(fig).verdict, "published quadrilateral is Buchsbaum");
    for (unsigned long long seed = 1; seed <= 100; ++seed) {
        Semigroup sg{Body(make_aligned_quad_family(seed))};
        if (!polygon_is_buchsbaum(sg).verdict) {
            c.require(false, "aligned quad seed " + std::to_string(seed));
            break;
        }
    }
    for (unsigned long long seed = 1; seed <= 100; ++seed) {
        Semigroup sg{Body(make_triangle_family(seed))};
        bool ok = polygon_is_buchsbaum(sg).verdict && polygon_is_cohen_macaulay(sg).cohen_macaulay;
        if (!ok) {
            c.require(false, "triangle seed " + std::to_string(seed));
            break;
        }
    }
    c.finish(0);
}

void criterion5_oracle_equivalence() {
    Criterion c("criterion 5: oracle equivalence on the corpus");
    auto corpus = full_corpus();
    c.require(corpus.size() >= 20, "corpus has at least 20 bodies");
    for (const auto& entry : corpus) {
        const Semigroup& sg = *entry.sg;
        long long cap = certified_cap(sg, 50, 50);

        // Membership over every lattice point with x^2 + y^2 <= 2500.
        bool member_ok = true;
        for (long long x = 0; x <= 50 && member_ok; ++x)
            for (long long y = 0; y <= 50; ++y) {
                LatticePoint p{x, y};
                if (norm2(p) > 2500) continue;
                if (sg.member(p) != brute_member(sg.body(), p, cap)) {
                    member_ok = false;
                    c.require(false, entry.name + ": membership mismatch at " +
                                         std::to_string(x) + "," + std::to_string(y));
                    break;
                }
            }

        // Minimal generators at a certified cap: large enough that every point
        // of the generator bounding box has its whole dilation interval below.
        const auto& gens = sg.generators().elements;
        long long gx = 1, gy = 1;
        for (const auto& g : gens) {
            gx = std::max(gx, g.x);
            gy = std::max(gy, g.y);
        }
        long long gen_cap = certified_cap(sg, gx + 1, gy + 1);
        auto brute = sorted(brute_min_generators(sg.body(), gen_cap));
        c.require(brute == gens, entry.name + ": generator sets agree (cap " +
                                     std::to_string(gen_cap) + ")");

        // Decision agreement at radius^2 = 2500.
        bool main_cm, main_buchs;
        if (sg.is_circle_body()) {
            auto gaps = circle_interior_gaps(sg);
            const auto n1 = sg.ray(1, false).generator;
            const auto n2 = sg.ray(2, false).generator;
            main_cm = true;
            for (const auto& a : gaps)
                if (sg.member(a + n1) && sg.member(a + n2)) main_cm = false;
            for (int which : {1, 2})
                for (long long s : sg.ray(which, false).prefix_gaps()) {
                    LatticePoint a = s * sg.ray(which, false).primitive;
                    if (sg.member(a + n1) && sg.member(a + n2)) main_cm = false;
                }
            main_buchs = circle_is_buchsbaum(sg).verdict;
        } else {
            main_cm = polygon_is_cohen_macaulay(sg).cohen_macaulay;
            main_buchs = polygon_is_buchsbaum(sg).verdict;
        }
        BruteDecision cm = brute_cm_check(sg.body(), 2500, cap);
        BruteDecision sbar = brute_sbar_cm(sg.body(), 2500, cap);
        c.require(cm.holds == main_cm, entry.name + ": CM verdict agrees with the oracle");
        c.require(sbar.holds == main_buchs,
                  entry.name + ": Buchsbaum verdict agrees with the Sbar oracle");
    }
    c.finish(600.0);
}

void criterion6_invariants() {
    Criterion c("criterion 6: invariant suites");
    std::mt19937_64 rng(2024);
    auto corpus = full_corpus();

    // Guarantee soundness: 1000 certified interior samples per circle.
    for (const auto& entry : corpus) {
        if (!entry.sg->is_circle_body()) continue;
        const Semigroup& sg = *entry.sg;
        CircleBound bound = circle_guarantee_bound(sg);
        std::uniform_int_distribution<long long> coord(0, 400);
        int tested = 0;
        long long guard = 0;
        while (tested < 1000 && ++guard < 2000000) {
            LatticePoint a{coord(rng), coord(rng)};
            if (!sg.cone().in_interior(a) || !bound.guarantees(a)) continue;
            ++tested;
            if (!sg.member(a)) {
                c.require(false, entry.name + ": guarantee violated at " + std::to_string(a.x) +
                                     "," + std::to_string(a.y));
                break;
            }
        }
        c.require(tested == 1000, entry.name + ": found 1000 certified samples");
    }

    // Skeleton coverage: 500 cone samples per polygon land in the five regions.
    for (const auto& entry : corpus) {
        if (entry.sg->is_circle_body()) continue;
        const Semigroup& sg = *entry.sg;
        Skeleton sk = polygon_skeleton(sg);
        const Cone& cone = sg.cone();
        auto in_strip = [&](const SkeletonSide& side, int which, const LatticePoint& z) {
            if (!side.point_contact) return false;
            Rational level = which == 1 ? cone.form1(Vec2Q(z)) : cone.form2(Vec2Q(z));
            Rational band = which == 1 ? cone.form1(side.offset) : cone.form2(side.offset);
            if (level.sign() < 0 || level > band) return false;
            Vec2Q entry_pt = Rational(side.j) * side.vertex + (level / band) * side.offset;
            return dot(Vec2Q(z) - entry_pt, side.vertex).sign() >= 0;
        };
        auto in_hull = [&](const std::vector<Vec2Q>& pts, const LatticePoint& z) {
            std::vector<Vec2Q> hull = convex_hull(pts);
            if (hull.size() < 3) return false;
            return LatticeRegion::hull_region(hull, false).contains(Vec2Q(z));
        };
        std::uniform_int_distribution<long long> coord(0, 100);
        int sampled = 0, covered = 0;
        long long guard = 0;
        while (sampled < 500 && ++guard < 2000000) {
            LatticePoint z{coord(rng), coord(rng)};
            if (!cone.in_cone(z) || norm2(z) > 10000) continue;
            ++sampled;
            Vec2Q d = Vec2Q(z) - sk.apex;
            bool ok = in_strip(sk.side1, 1, z) || in_strip(sk.side2, 2, z) ||
                      in_hull(sk.side1.wedge, z) || in_hull(sk.side2.wedge, z) ||
                      (cone.form1(d).sign() >= 0 && cone.form2(d).sign() >= 0);
            if (ok) ++covered;
        }
        c.require(sampled == covered && sampled == 500,
                  entry.name + ": cone coverage " + std::to_string(covered) + "/" +
                      std::to_string(sampled));
    }

    // Strip periodicity: exact set equality per period representative.
    for (const auto& entry : corpus) {
        if (entry.sg->is_circle_body()) continue;
        Skeleton sk = polygon_skeleton(*entry.sg);
        for (int which : {1, 2}) {
            const SkeletonSide& side = which == 1 ? sk.side1 : sk.side2;
            if (!side.point_contact) continue;
            const LatticePoint step = which == 1 ? sk.n1 : sk.n2;
            for (long long h = 0; h < side.period; ++h) {
                auto base = enumerate_lattice(
                    LatticeRegion::hull_region(side.gap_cell(side.j + h), true));
                auto far = enumerate_lattice(LatticeRegion::hull_region(
                    side.gap_cell(side.j + h + side.period), true));
                std::vector<LatticePoint> shifted;
                for (const auto& q : base) shifted.push_back(q + step);
                if (sorted(shifted) != sorted(far))
                    c.require(false, entry.name + ": strip periodicity broken");
            }
        }
    }

    // Reflection equivariance of verdicts and generators.
    for (const auto& entry : corpus) {
        const Semigroup& sg = *entry.sg;
        Semigroup mirrored{reflect_xy(sg.body())};
        std::vector<LatticePoint> mapped;
        for (const auto& g : sg.generators().elements) mapped.push_back(reflect_xy(g));
        c.require(sorted(mapped) == mirrored.generators().elements,
                  entry.name + ": generators reflect pointwise");
        bool b1, b2;
        if (sg.is_circle_body()) {
            b1 = circle_is_buchsbaum(sg).verdict;
            b2 = circle_is_buchsbaum(mirrored).verdict;
        } else {
            b1 = polygon_is_buchsbaum(sg).verdict;
            b2 = polygon_is_buchsbaum(mirrored).verdict;
            c.require(polygon_is_cohen_macaulay(sg).cohen_macaulay ==
                          polygon_is_cohen_macaulay(mirrored).cohen_macaulay,
                      entry.name + ": CM verdict reflects");
        }
        c.require(b1 == b2, entry.name + ": Buchsbaum verdict reflects");
    }

    // S ⊆ Sbar ⊆ cone, pointwise on a sampled window.
    for (const auto& entry : corpus) {
        const Semigroup& sg = *entry.sg;
        std::uniform_int_distribution<long long> coord(0, 40);
        for (int i = 0; i < 400; ++i) {
            LatticePoint a{coord(rng), coord(rng)};
            if (sg.member(a) && !sg.member_sbar(a))
                c.require(false, entry.name + ": S not contained in Sbar");
            if (sg.member_sbar(a) && !sg.cone().in_cone(a))
                c.require(false, entry.name + ": Sbar leaves the cone");
        }
    }
    c.finish(0);
}

}  // namespace

int main() {
    criterion1_circle_example();
    criterion2_polygon_example();
    criterion3_strip_figure();
    criterion4_families();
    criterion5_oracle_equivalence();
    criterion6_invariants();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
