#include "cbsg/circle_semigroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "cbsg/region.hpp"

namespace cbsg {

namespace {

const RationalCircle& circle_of(const Semigroup& sg) {
    if (!sg.is_circle_body()) throw InternalError("circle analysis applied to a polygon");
    return as_circle(sg.body());
}

Rational eval_form(const LatticePoint& f, const LatticePoint& a) {
    return Rational(f.x * a.x + f.y * a.y);
}

// Sign-fix a line form so it is nonnegative on the cone (probe: u1 + u2).
LatticePoint oriented_form(const Vec2Q& line_dir, const LatticePoint& probe) {
    LatticePoint f = primitive_signed({line_dir.y, -line_dir.x});
    long long v = f.x * probe.x + f.y * probe.y;
    if (v == 0) throw InternalError("form probe lies on the vanishing line");
    if (v < 0) f = {-f.x, -f.y};
    return f;
}

}  // namespace

CircleAffineness circle_affineness(const RationalCircle& circle) {
    CircleAffineness out;
    Cone cone = cone_of(circle);  // may throw NotSimplicial / UnsupportedGeometry
    for (const Ray* ray : {&cone.tau1, &cone.tau2}) {
        if (std::holds_alternative<IrrationalTangent>(ray->contact)) {
            out.affine = false;
            out.reason = "tangent contact point is irrational (|c|^2 - r^2 = " +
                         circle.origin_power().str() + " is not a rational square)";
            out.witnesses.clear();
            return out;
        }
        if (ray->is_point_contact()) {
            out.witnesses.push_back(ray->point_contact().point);
        } else {
            const auto& seg = ray->segment_contact();
            Rational sigma = simplest_rational_in(seg.lo, seg.hi);
            out.witnesses.push_back(sigma * Vec2Q(*ray->direction));
        }
    }
    out.affine = true;
    return out;
}

CircleBound circle_guarantee_bound(const Semigroup& sg) {
    const RationalCircle& c = circle_of(sg);
    const Cone& cone = sg.cone();
    const Rational a = c.origin_power();
    if (a.sign() <= 0) throw UnsupportedGeometry("origin inside the closed disk");
    LatticePoint probe = cone.dir1() + cone.dir2();

    CircleBound out;
    if (auto s = a.sqrt_exact()) {
        // Both tangent lines are rational: Delta(z) = (z·c)^2 - a|z|^2 factors
        // as kappa * form1 * form2 over the tangent directions.
        Vec2Q cperp = perp_ccw(c.center);
        Rational inv = Rational(1) / c.center_norm2();
        Vec2Q t_hi = inv * ((*s * *s) * c.center + (c.radius * *s) * cperp);
        Vec2Q t_lo = inv * ((*s * *s) * c.center - (c.radius * *s) * cperp);
        out.form1 = oriented_form(t_hi, probe);
        out.form2 = oriented_form(t_lo, probe);
        out.factored = true;

        Rational qxx = c.center.x * c.center.x - a;
        Rational qxy = Rational(2) * c.center.x * c.center.y;
        Rational qyy = c.center.y * c.center.y - a;
        Rational pxx(out.form1.x * out.form2.x);
        Rational pxy(out.form1.x * out.form2.y + out.form1.y * out.form2.x);
        Rational pyy(out.form1.y * out.form2.y);
        if (!pxx.is_zero())
            out.kappa = qxx / pxx;
        else if (!pxy.is_zero())
            out.kappa = qxy / pxy;
        else
            out.kappa = qyy / pyy;
        if (!(out.kappa * pxx == qxx && out.kappa * pxy == qxy && out.kappa * pyy == qyy))
            throw InternalError("tangent factorization of the cone quadratic failed");
        if (out.kappa.sign() <= 0) throw InternalError("tangent factorization has nonpositive scale");
        // Interval length 2*sqrt(Delta)/a >= 1 iff form1*form2 >= a^2/(4 kappa).
        out.bound = a * a / (Rational(4) * out.kappa);
    } else {
        // Irrational tangents: affineness forces both contacts to be axis
        // chords, so the center is in the open quadrant and all three
        // coefficients of Delta are positive; Delta >= 2 c_x c_y · x y.
        if (!sg.cone().tau1.is_segment_contact() || !sg.cone().tau2.is_segment_contact())
            throw NotAffine("tangent contact point is irrational");
        Rational cx = c.center.x, cy = c.center.y;
        if (cx.sign() <= 0 || cy.sign() <= 0 || !(cy < c.radius) || !(cx < c.radius))
            throw InternalError("axis-chord bound requires chords on both axes");
        out.form1 = {1, 0};
        out.form2 = {0, 1};
        out.factored = false;
        out.kappa = 0;
        out.bound = a * a / (Rational(8) * cx * cy);
    }
    // Cone duality: form_i >= coef * coneform_i with the coefficients below.
    Rational f1_u2 = eval_form(out.form1, cone.dir2());
    Rational f2_u1 = eval_form(out.form2, cone.dir1());
    Rational l1_u2(cone.form1(cone.dir2()));
    Rational l2_u1(cone.form2(cone.dir1()));
    if (f1_u2.sign() <= 0 || f2_u1.sign() <= 0)
        throw InternalError("guarantee forms degenerate on the opposite rays");
    out.alpha1 = f1_u2 / l1_u2;
    out.beta2 = f2_u1 / l2_u1;
    return out;
}

namespace {

// Interior lattice points not certified by the bound: form1, form2 >= 1 and
// form1*form2 <= B (a superset of the true residual), intersected with the
// cone interior.
std::vector<LatticePoint> residual_points(const Semigroup& sg, const CircleBound& bound,
                                          const Rational& product_cap) {
    const Cone& cone = sg.cone();
    LatticeRegion region;
    region.add({-bound.form1.x, -bound.form1.y}, Rational(-1));
    region.add({-bound.form2.x, -bound.form2.y}, Rational(-1));
    region.add(bound.form1, product_cap);
    region.add(bound.form2, product_cap);
    LatticePoint l1{cone.dir1().y, -cone.dir1().x};
    LatticePoint l2{-cone.dir2().y, cone.dir2().x};
    region.add({-l1.x, -l1.y}, Rational(-1));
    region.add({-l2.x, -l2.y}, Rational(-1));
    std::vector<LatticePoint> out;
    for (const auto& p : enumerate_lattice(region))
        if (bound.product(p) <= product_cap) out.push_back(p);
    return out;
}

void sort_by_norm_lex(std::vector<LatticePoint>& pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        long long na = norm2(a), nb = norm2(b);
        if (na != nb) return na < nb;
        return a < b;
    });
}

}  // namespace

std::vector<LatticePoint> circle_interior_gaps_capped(const Semigroup& sg, const Rational& cap) {
    CircleBound bound = circle_guarantee_bound(sg);
    std::vector<LatticePoint> gaps;
    for (const auto& p : residual_points(sg, bound, max(cap, bound.bound)))
        if (!sg.member(p)) gaps.push_back(p);
    sort_by_norm_lex(gaps);
    return gaps;
}

std::vector<LatticePoint> circle_interior_gaps(const Semigroup& sg) {
    return circle_interior_gaps_capped(sg, Rational(0));
}

GeneratorSet circle_min_generators_impl(const Semigroup& sg) {
    const Cone& cone = sg.cone();
    CircleBound bound = circle_guarantee_bound(sg);
    const RaySemigroup& ray1 = sg.ray(1, false);
    const RaySemigroup& ray2 = sg.ray(2, false);

    // Every interior member g with coneform2(g) > E2 has g - n1 a nonzero cone
    // point whose form product clears the bound (and symmetrically with n2),
    // hence decomposes; generators live in the [0,E1]x[0,E2] form rectangle.
    Rational margin = bound.bound / (bound.alpha1 * bound.beta2);
    Rational e1 = Rational(cone.form1(ray2.generator)) + margin;
    Rational e2 = Rational(cone.form2(ray1.generator)) + margin;

    LatticePoint l1{cone.dir1().y, -cone.dir1().x};
    LatticePoint l2{-cone.dir2().y, cone.dir2().x};
    LatticeRegion rect;
    rect.add({-l1.x, -l1.y}, Rational(0));
    rect.add({-l2.x, -l2.y}, Rational(0));
    rect.add(l1, e1);
    rect.add(l2, e2);

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
        bool decomposable = false;
        for (const auto& a : members) {
            if (a.x > g.x) break;  // lexicographic order: a.x only grows
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
    // Ray generators beyond the rectangle (boundary decompositions stay on the
    // ray, so the ray sieves are already exact).
    for (const RaySemigroup* r : {&ray1, &ray2})
        for (long long s : r->minimal_multiples) {
            LatticePoint p = s * r->primitive;
            if (std::find(out.elements.begin(), out.elements.end(), p) == out.elements.end())
                out.elements.push_back(p);
        }
    std::sort(out.elements.begin(), out.elements.end());
    out.ray1 = ray1.generator;
    out.ray2 = ray2.generator;
    return out;
}

long long circle_sbar_stable_index(const Semigroup& sg, int which) {
    CircleBound bound = circle_guarantee_bound(sg);
    const Cone& cone = sg.cone();
    LatticePoint p = which == 1 ? cone.dir1() : cone.dir2();
    const LatticePoint& fsame = which == 1 ? bound.form1 : bound.form2;
    const auto& gens = sg.generators().elements;

    long long s = 1;
    for (bool stable = false; !stable; ++s) {
        if (s > 2'000'000) throw InternalError("sbar stable index search diverged");
        stable = true;
        for (const auto& n : gens) {
            if (eval_form(fsame, n).is_zero()) continue;  // same-ray: handled by divisibility
            if (!bound.guarantees(s * p + n)) {
                stable = false;
                break;
            }
        }
        if (stable) return s;
    }
    return s;
}

CircleBuchsbaumCertificate circle_is_buchsbaum(const Semigroup& sg) {
    CircleBuchsbaumCertificate cert;
    std::vector<LatticePoint> gaps = circle_interior_gaps(sg);
    bool gaps_ok = true;
    for (const auto& g : gaps) {
        bool in = sg.member_sbar(g);
        gaps_ok = gaps_ok && in;
        cert.gaps.push_back({g, in});
    }
    const RaySemigroup& s1 = sg.ray(1, true);
    const RaySemigroup& s2 = sg.ray(2, true);
    cert.ray1 = make_ray_report(s1);
    cert.ray2 = make_ray_report(s2);
    cert.verdict = gaps_ok && s1.single_generator && s2.single_generator;
    return cert;
}

}  // namespace cbsg
