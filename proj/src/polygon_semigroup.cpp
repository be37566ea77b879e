#include "cbsg/polygon_semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "cbsg/region.hpp"

namespace cbsg {

namespace {

const ConvexPolygon& polygon_of(const Semigroup& sg) {
    if (sg.is_circle_body()) throw InternalError("polygon analysis applied to a circle");
    return as_polygon(sg.body());
}

const Vec2Q kOrigin{Rational(0), Rational(0)};

std::vector<Vec2Q> translate(const std::vector<Vec2Q>& pts, const Vec2Q& by) {
    std::vector<Vec2Q> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(p + by);
    return out;
}

// Lattice points of the hull of `pts`; `open` takes the topological interior.
std::vector<LatticePoint> hull_lattice(const std::vector<Vec2Q>& pts, bool open) {
    std::vector<Vec2Q> hull = convex_hull(pts);
    if (hull.size() >= 3) return enumerate_lattice(LatticeRegion::hull_region(hull, open));
    if (open) return {};
    if (hull.size() == 2) return lattice_points_on_segment(hull[0], hull[1]);
    if (hull.size() == 1 && is_lattice(hull[0])) return {to_lattice(hull[0])};
    return {};
}

void sort_norm_lex(std::vector<LatticePoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        long long na = norm2(a), nb = norm2(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

long long ceil_ll(const Rational& r) { return to_int64(r.ceil()); }

// Skeleton data for the greater-slope ray of `poly`, which must have a point
// contact. Works on the reflected polygon to serve the other ray.
SkeletonSide point_side_raw(const ConvexPolygon& poly, const Cone& cone) {
    const Vec2Q P = cone.tau1.point_contact().point;
    const std::size_t n = poly.vertices.size();
    std::size_t idx = n;
    for (std::size_t i = 0; i < n; ++i)
        if (poly.vertices[i] == P) idx = i;
    if (idx == n) throw InternalError("point contact is not a polygon vertex");
    const Vec2Q next = poly.vertices[(idx + 1) % n] - P;
    const Vec2Q prev = poly.vertices[(idx + n - 1) % n] - P;

    // j·(P + s·prev) = (j+1)·(P + u·next) solves to j·s and (j+1)·u constant.
    Rational det = cross(next, prev);
    if (det.sign() <= 0) throw InternalError("vertex neighborhood is not convex ccw");
    Rational alpha = cross(next, P) / det;   // = j·s
    Rational beta = cross(prev, P) / det;    // = (j+1)·u
    if (alpha.sign() <= 0 || beta.sign() <= 0)
        throw InternalError("edge dilation solve left the cone");

    SkeletonSide side;
    side.point_contact = true;
    side.vertex = P;
    side.offset = alpha * prev;
    side.j = std::max<long long>({1, ceil_ll(alpha), ceil_ll(beta) - 1});

    // The meeting points V(h) = h·P + offset are collinear with direction P.
    if (!cross(side.meet(side.j + 1) - side.meet(side.j), P).is_zero() ||
        !cross(side.meet(side.j + 2) - side.meet(side.j), P).is_zero())
        throw InternalError("meeting points are not collinear along the ray");

    Vec2Q u2{Rational(cone.dir2().x), Rational(cone.dir2().y)};
    Rational t = -cross(u2, side.offset) / cross(u2, P);
    side.nu_other = side.offset + t * P;
    if (!cross(u2, side.nu_other).is_zero() || dot(side.nu_other, u2).sign() <= 0)
        throw InternalError("parallel line misses the opposite ray");

    BigInt l;
    mpz_lcm(l.get_mpz_t(), P.x.den().get_mpz_t(), P.y.den().get_mpz_t());
    side.period = to_int64(l);

    side.wedge = {kOrigin, Rational(side.j) * P, side.meet(side.j), side.nu_other};
    return side;
}

SkeletonSide reflect_side(const SkeletonSide& s) {
    SkeletonSide out = s;
    out.vertex = reflect_xy(s.vertex);
    out.offset = reflect_xy(s.offset);
    out.nu_other = reflect_xy(s.nu_other);
    out.wedge.clear();
    for (const auto& p : s.wedge) out.wedge.push_back(reflect_xy(p));
    return out;
}

SkeletonSide compute_side(const Semigroup& sg, int which) {
    const Cone& cone = sg.cone();
    const Ray& ray = which == 1 ? cone.tau1 : cone.tau2;
    if (ray.is_segment_contact()) {
        const auto& seg = ray.segment_contact();
        SkeletonSide side;
        side.point_contact = false;
        side.seg_lo = seg.lo.as_rational();
        side.seg_hi = seg.hi.as_rational();
        if (side.seg_lo.sign() <= 0)
            throw UnsupportedGeometry("contact segment reaches the origin");
        side.overlap = std::max<long long>(1, ceil_ll(side.seg_lo / (side.seg_hi - side.seg_lo)));
        side.wedge = {kOrigin};
        return side;
    }
    if (which == 1) return point_side_raw(polygon_of(sg), cone);
    ConvexPolygon reflected = reflect_xy(polygon_of(sg));
    return reflect_side(point_side_raw(reflected, cone_of(reflected)));
}

}  // namespace

std::vector<Vec2Q> SkeletonSide::gap_cell(long long mu) const {
    return {Rational(mu) * vertex, Rational(mu + 1) * vertex, meet(mu)};
}

Skeleton polygon_skeleton(const Semigroup& sg) {
    const ConvexPolygon& poly = polygon_of(sg);
    if (poly.contains(kOrigin))
        throw UnsupportedGeometry("polygon contains the origin");

    Skeleton sk;
    sk.side1 = compute_side(sg, 1);
    sk.side2 = compute_side(sg, 2);
    const bool p1 = sk.side1.point_contact, p2 = sk.side2.point_contact;
    sk.case_id = p1 ? (p2 ? 2 : 3) : (p2 ? 4 : 1);

    const Cone& cone = sg.cone();
    Vec2Q u1{Rational(cone.dir1().x), Rational(cone.dir1().y)};
    Vec2Q u2{Rational(cone.dir2().x), Rational(cone.dir2().y)};

    switch (sk.case_id) {
        case 1: sk.apex = kOrigin; break;
        case 2:
            sk.apex = line_intersection({sk.side1.offset, sk.side1.vertex},
                                        {sk.side2.offset, sk.side2.vertex});
            break;
        case 3: sk.apex = sk.side1.nu_other; break;
        case 4: sk.apex = sk.side2.nu_other; break;
    }

    long long jc = 1;
    for (const SkeletonSide* s : {&sk.side1, &sk.side2})
        jc = std::max(jc, s->point_contact ? s->j : s->overlap);
    ++jc;  // margin: a strictly larger core only adds points that are members

    auto corner = [&](const SkeletonSide& s, const Vec2Q& u, long long h) {
        return s.point_contact ? s.meet(h) : Rational(h) * (s.seg_hi * u);
    };
    for (;; ++jc) {
        if (jc > 1'000'000) throw InternalError("core triangle index diverged");
        Vec2Q c1 = corner(sk.side1, u1, jc);
        Vec2Q c2 = corner(sk.side2, u2, jc);
        // Both corners must sit beyond the apex along their boundary rays.
        if (dot(c1 - sk.apex, u1).sign() >= 0 && dot(c2 - sk.apex, u2).sign() >= 0) {
            sk.core = {sk.apex, c1, c2};
            break;
        }
    }
    sk.core_index = jc;
    sk.n1 = sg.ray(1, false).generator;
    sk.n2 = sg.ray(2, false).generator;
    return sk;
}

namespace {

bool in_apex_region(const Cone& cone, const Vec2Q& apex, const LatticePoint& z) {
    Vec2Q d = Vec2Q(z) - apex;
    return cone.form1(d).sign() >= 0 && cone.form2(d).sign() >= 0;
}

std::vector<LatticePoint> strip_period_gaps(const SkeletonSide& side) {
    std::vector<LatticePoint> out;
    if (!side.point_contact) return out;
    for (long long h = 0; h < side.period; ++h) {
        auto pts = hull_lattice(side.gap_cell(side.j + h), /*open=*/true);
        out.insert(out.end(), pts.begin(), pts.end());
    }
    sort_norm_lex(out);
    return out;
}

}  // namespace

GapComparison polygon_gap_comparison(const Semigroup& sg) {
    Skeleton sk = polygon_skeleton(sg);
    const Cone& cone = sg.cone();
    GapComparison out;
    out.case_id = sk.case_id;
    out.strip_gaps1 = strip_period_gaps(sk.side1);
    out.strip_gaps2 = strip_period_gaps(sk.side2);

    std::vector<LatticePoint> wedge_pts;
    for (const SkeletonSide* s : {&sk.side1, &sk.side2}) {
        auto pts = hull_lattice(s->wedge, /*open=*/false);
        wedge_pts.insert(wedge_pts.end(), pts.begin(), pts.end());
    }
    sort_norm_lex(wedge_pts);
    for (const auto& p : wedge_pts) {
        if (!cone.in_interior(p) || sg.member(p)) continue;
        out.wedge_gaps.push_back(p);
        if (!sg.member_sbar(p)) out.wedge_sbar_gaps.push_back(p);
    }

    std::vector<LatticePoint> core_pts = hull_lattice(sk.core, /*open=*/false);
    sort_norm_lex(core_pts);
    bool interior_apex_clean = true;
    for (const auto& p : core_pts) {
        if (!in_apex_region(cone, sk.apex, p) || sg.member(p)) continue;
        out.apex_gaps.push_back(p);
        if (!sg.member_sbar(p)) {
            out.apex_sbar_gaps.push_back(p);
            if (cone.in_interior(p)) interior_apex_clean = false;
        }
    }

    out.equal = out.strip_gaps1.empty() && out.strip_gaps2.empty() &&
                out.wedge_sbar_gaps.empty() && interior_apex_clean;
    return out;
}

PolygonGaps polygon_interior_gaps(const Semigroup& sg) {
    Skeleton sk = polygon_skeleton(sg);
    const Cone& cone = sg.cone();
    GapComparison comp = polygon_gap_comparison(sg);
    PolygonGaps out;
    out.strip_reps1 = comp.strip_gaps1;
    out.strip_reps2 = comp.strip_gaps2;
    out.strip_step1 = sk.n1;
    out.strip_step2 = sk.n2;
    out.finite = comp.wedge_gaps;
    for (const auto& p : comp.apex_gaps)
        if (cone.in_interior(p)) out.finite.push_back(p);
    sort_norm_lex(out.finite);
    return out;
}

CohenMacaulayResult polygon_is_cohen_macaulay(const Semigroup& sg) {
    Skeleton sk = polygon_skeleton(sg);
    const Cone& cone = sg.cone();
    const LatticePoint n1 = sk.n1, n2 = sk.n2;

    // Explicitly checkable gaps: wedges and the core (with boundary), plus the
    // finite prefix of each segment-contact ray. The remaining gap families
    // discharge analytically: a strip-cell gap a has a + n1 in the next cell
    // (again a gap), and a point-contact ray gap s·p has s + m still off the
    // multiples of m, so the Corollary condition holds there automatically.
    std::vector<LatticePoint> candidates;
    for (const SkeletonSide* s : {&sk.side1, &sk.side2}) {
        auto pts = hull_lattice(s->wedge, false);
        candidates.insert(candidates.end(), pts.begin(), pts.end());
    }
    auto core_pts = hull_lattice(sk.core, false);
    for (const auto& p : core_pts)
        if (in_apex_region(cone, sk.apex, p)) candidates.push_back(p);
    for (int which : {1, 2}) {
        const RaySemigroup& r = sg.ray(which, false);
        for (long long s : r.prefix_gaps()) candidates.push_back(s * r.primitive);
    }
    sort_norm_lex(candidates);

    CohenMacaulayResult out;
    for (const auto& a : candidates) {
        if (!cone.in_cone(a) || a.is_origin() || sg.member(a)) continue;
        if (sg.member(a + n1) && sg.member(a + n2)) out.violations.push_back(a);
    }
    out.cohen_macaulay = out.violations.empty();
    if (!out.violations.empty()) out.witness = out.violations.front();
    return out;
}

PolygonBuchsbaumCertificate polygon_is_buchsbaum(const Semigroup& sg) {
    Skeleton sk = polygon_skeleton(sg);
    PolygonBuchsbaumCertificate cert;
    cert.comparison = polygon_gap_comparison(sg);

    const RaySemigroup& r1 = sg.ray(1, true);
    const RaySemigroup& r2 = sg.ray(2, true);
    cert.ray1 = make_ray_report(r1);
    cert.ray2 = make_ray_report(r2);
    cert.nprime1 = r1.generator;
    cert.nprime2 = r2.generator;

    for (const auto& p : cert.comparison.apex_gaps)
        cert.apex_witnesses.push_back({p, sg.member_sbar(p)});
    cert.apex_in_sbar = cert.comparison.apex_sbar_gaps.empty();

    if (cert.comparison.equal) {
        cert.branch = PolygonBuchsbaumCertificate::InteriorEqual;
        cert.verdict = r1.single_generator && r2.single_generator;
        return cert;
    }
    cert.branch = PolygonBuchsbaumCertificate::InteriorDiffers;
    // Upsilon': wedge points outside Sbar whose n'-translates both return to Sbar.
    std::vector<LatticePoint> wedge_pts;
    for (const SkeletonSide* s : {&sk.side1, &sk.side2}) {
        auto pts = hull_lattice(s->wedge, false);
        wedge_pts.insert(wedge_pts.end(), pts.begin(), pts.end());
    }
    sort_norm_lex(wedge_pts);
    for (const auto& a : wedge_pts) {
        if (a.is_origin() || sg.member_sbar(a)) continue;
        if (sg.member_sbar(a + cert.nprime1) && sg.member_sbar(a + cert.nprime2))
            cert.upsilon_prime.push_back(a);
    }
    cert.verdict = cert.upsilon_prime.empty() && cert.apex_in_sbar;
    return cert;
}

GeneratorSet polygon_min_generators_impl(const Semigroup& sg) {
    Skeleton sk = polygon_skeleton(sg);
    const Cone& cone = sg.cone();

    std::unordered_set<LatticePoint, LatticePointHash> cand;
    auto add_pts = [&](const std::vector<LatticePoint>& pts) {
        for (const auto& p : pts)
            if (!p.is_origin() && cone.in_cone(p)) cand.insert(p);
    };

    // Wedges, one strip period plus a step per point-contact side, the core
    // triangle with its two generator translates, and the apex parallelogram.
    for (const SkeletonSide* s : {&sk.side1, &sk.side2}) {
        add_pts(hull_lattice(s->wedge, false));
        if (s->point_contact) {
            long long hi = s->j + 2 * s->period + 2;
            std::vector<Vec2Q> window{Rational(s->j) * s->vertex, s->meet(s->j),
                                      Rational(hi) * s->vertex, s->meet(hi)};
            add_pts(hull_lattice(window, false));
        }
    }
    add_pts(hull_lattice(sk.core, false));
    add_pts(hull_lattice(translate(sk.core, Vec2Q(sk.n1)), false));
    add_pts(hull_lattice(translate(sk.core, Vec2Q(sk.n2)), false));
    std::vector<Vec2Q> par{sk.apex, sk.apex + Vec2Q(sk.n1), sk.apex + Vec2Q(sk.n2),
                           sk.apex + Vec2Q(sk.n1 + sk.n2)};
    add_pts(hull_lattice(par, false));

    const RaySemigroup& r1 = sg.ray(1, false);
    const RaySemigroup& r2 = sg.ray(2, false);
    for (const RaySemigroup* r : {&r1, &r2}) {
        long long window = r->tail_start + std::lcm(r->period, r->min_member);
        for (long long s = 1; s < window; ++s)
            if (r->member_s(s)) cand.insert(s * r->primitive);
    }

    // Member pool over the smallest form-rectangle containing every candidate;
    // decompositions of a candidate cannot leave it (the forms are additive
    // and nonnegative on the cone).
    long long c1 = 0, c2 = 0;
    for (const auto& p : cand) {
        c1 = std::max(c1, cone.form1(p));
        c2 = std::max(c2, cone.form2(p));
    }
    LatticePoint l1{cone.dir1().y, -cone.dir1().x};
    LatticePoint l2{-cone.dir2().y, cone.dir2().x};
    LatticeRegion rect;
    rect.add({-l1.x, -l1.y}, Rational(0));
    rect.add({-l2.x, -l2.y}, Rational(0));
    rect.add(l1, Rational(c1));
    rect.add(l2, Rational(c2));

    std::vector<LatticePoint> members;
    std::unordered_set<LatticePoint, LatticePointHash> member_set;
    for (const auto& p : enumerate_lattice(rect)) {
        if (p.is_origin() || !sg.member(p)) continue;
        members.push_back(p);
        member_set.insert(p);
    }
    std::sort(members.begin(), members.end());

    GeneratorSet out;
    for (const auto& g : members) {
        if (!cand.count(g)) continue;
        bool decomposable = false;
        for (const auto& a : members) {
            if (a.x > g.x) break;
            if (a.y > g.y || a == g) continue;
            LatticePoint rest = g - a;
            if (rest.is_origin()) continue;
            if (member_set.count(rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.elements.push_back(g);
    }
    std::sort(out.elements.begin(), out.elements.end());
    out.ray1 = r1.generator;
    out.ray2 = r2.generator;
    return out;
}

long long polygon_sbar_stable_index(const Semigroup& sg, int which) {
    Skeleton sk = polygon_skeleton(sg);
    const Cone& cone = sg.cone();
    const SkeletonSide& side = which == 1 ? sk.side1 : sk.side2;
    if (!side.point_contact)
        throw InternalError("stable index requested for a segment-contact ray");

    LatticePoint p = which == 1 ? cone.dir1() : cone.dir2();
    auto fsame = [&](const Vec2Q& v) { return which == 1 ? cone.form1(v) : cone.form2(v); };
    auto fother = [&](const Vec2Q& v) { return which == 1 ? cone.form2(v) : cone.form1(v); };
    const Rational band = fsame(side.offset);
    const Rational pp{norm2(p)};
    auto proj = [&](const Vec2Q& v) { return dot(v, Vec2Q(p)) / pp; };

    Rational core_reach{0};
    for (const auto& v : sk.core) core_reach = max(core_reach, proj(v));

    long long stable = 1;
    for (const auto& n : sg.generators().elements) {
        Vec2Q nv{Rational(n.x), Rational(n.y)};
        Rational level = fsame(nv);
        if (level.is_zero()) continue;  // same ray: divisibility argument
        Rational need;
        if (level <= band) {
            // Strip band: past the entry segment, membership of z and z + n_ray
            // coincide, so the contribution of this generator is periodic.
            Vec2Q entry = Rational(side.j) * side.vertex + (level / band) * side.offset;
            need = proj(entry) - proj(nv);
        } else {
            // Apex band: once s·p + n clears the apex region and the core
            // triangle it is a member for good.
            Rational a = fother(sk.apex - nv) / fother(Vec2Q(p));
            Rational c = core_reach - proj(nv);
            need = max(a, c);
        }
        stable = std::max(stable, ceil_ll(need) + 1);
    }
    return stable;
}

ConvexPolygon make_triangle_family(unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 48), den(1, 8);
    auto coord = [&] { return Rational(num(rng), den(rng)); };
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<Vec2Q> pts{{coord(), coord()}, {coord(), coord()}, {coord(), coord()}};
        try {
            ConvexPolygon poly = normalize_polygon(pts);
            if (poly.vertices.size() != 3 || poly.contains(kOrigin)) continue;
            return poly;
        } catch (const NotAConvexBody&) {
            continue;
        }
    }
    throw GenerationFailed("no valid triangle after bounded retries");
}

ConvexPolygon make_aligned_quad_family(unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(1, 5), stretch(1, 3), frac(1, 9);
    for (int attempt = 0; attempt < 512; ++attempt) {
        LatticePoint a{small(rng), small(rng)}, b{small(rng), small(rng)}, c{small(rng), small(rng)};
        // Three pairwise distinct slopes; sort so u1 > umid > u2.
        if (cross(a, b) == 0 || cross(a, c) == 0 || cross(b, c) == 0) continue;
        LatticePoint dirs[3] = {a, b, c};
        std::sort(dirs, dirs + 3, [](LatticePoint l, LatticePoint r) { return cross(l, r) < 0; });
        LatticePoint u1 = dirs[0], umid = dirs[1], u2 = dirs[2];

        long long k1 = stretch(rng), k4 = stretch(rng);
        Vec2Q p1{Rational(k1 * u1.x), Rational(k1 * u1.y)};
        Vec2Q p4{Rational(k4 * u2.x), Rational(k4 * u2.y)};
        // Radius at which the chord p1-p4 crosses the middle ray.
        Vec2Q um{Rational(umid.x), Rational(umid.y)};
        Rational rho = cross(p1, p4 - p1) / cross(um, p4 - p1);
        if (rho.sign() <= 0) continue;
        Rational f2 = Rational(frac(rng), 10);        // in (0, 1)
        Rational f3 = Rational(1) + Rational(frac(rng), 10);
        Vec2Q p2 = (f2 * rho) * um;
        Vec2Q p3 = (f3 * rho) * um;
        try {
            ConvexPolygon poly = normalize_polygon({p1, p2, p3, p4});
            if (poly.vertices.size() != 4 || poly.contains(kOrigin)) continue;
            // Corollary hypotheses: integral vertices on both rays, O-P2-P3 aligned.
            if (!cross(p2, p3).is_zero()) throw InternalError("middle vertices not aligned");
            return poly;
        } catch (const NotAConvexBody&) {
            continue;
        }
    }
    throw GenerationFailed("no valid aligned quadrilateral after bounded retries");
}

}  // namespace cbsg
