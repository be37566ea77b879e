#include "cbsg/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace cbsg {

std::optional<long long> DilationInterval::first_integer(long long kmin) const {
    if (empty) return std::nullopt;
    BigInt k = lo.ceil();
    BigInt km = to_bigint(kmin);
    if (k < km) k = km;
    if (hi && compare(Surd(Rational(k)), *hi) > 0) return std::nullopt;
    return to_int64(k);
}

namespace {

DilationInterval circle_dilation(const RationalCircle& c, const LatticePoint& P) {
    DilationInterval out;
    const Rational a = c.origin_power();
    const Vec2Q p{Rational(P.x), Rational(P.y)};
    const Rational pc = dot(p, c.center);
    const Rational pp = norm2(p);

    if (P.is_origin()) {
        // {k : O ∈ kF} = {0} plus, when O ∈ F, every k >= 1.
        out.empty = false;
        out.lo = Surd(Rational(0));
        out.hi = a.sign() > 0 ? std::optional<Surd>(Surd(Rational(0))) : std::nullopt;
        return out;
    }
    if (a.sign() > 0) {
        Rational disc = pc * pc - a * pp;
        if (disc.sign() < 0) return out;
        out.empty = false;
        out.lo = Surd(pc / a, Rational(-1) / a, disc);
        out.hi = Surd(pc / a, Rational(1) / a, disc);
        return out;
    }
    if (a.sign() == 0) {
        // Origin on the circle: the quadratic degenerates to -2(P·c)k + |P|^2 <= 0.
        if (pc.sign() <= 0) return out;
        out.empty = false;
        out.lo = Surd(pp / (Rational(2) * pc));
        out.hi = std::nullopt;
        return out;
    }
    // Origin interior: downward parabola, solutions outside the roots; with
    // value |P|^2 > 0 at k = 0 the nonnegative part is [larger root, ∞).
    Rational disc = pc * pc - a * pp;
    Surd r1(pc / a, Rational(-1) / a, disc);
    Surd r2(pc / a, Rational(1) / a, disc);
    out.empty = false;
    out.lo = max(r1, r2);
    out.hi = std::nullopt;
    return out;
}

DilationInterval polygon_dilation(const ConvexPolygon& poly, const LatticePoint& P) {
    DilationInterval out;
    const Vec2Q p{Rational(P.x), Rational(P.y)};
    std::optional<Rational> lo, hi;
    for (const auto& h : poly.half_planes) {
        Rational ap = h.eval(p);
        int s = h.offset.sign();
        if (s == 0) {
            if (ap.sign() > 0) return out;
            continue;
        }
        Rational bound = ap / h.offset;
        if (s > 0) {
            if (!lo || bound > *lo) lo = bound;
        } else {
            if (!hi || bound < *hi) hi = bound;
        }
    }
    Rational lo_v = lo ? max(*lo, Rational(0)) : Rational(0);
    if (P.is_origin()) {
        out.empty = false;
        out.lo = Surd(Rational(0));
        bool origin_in_body = poly.contains(Vec2Q{Rational(0), Rational(0)});
        out.hi = origin_in_body ? std::nullopt : std::optional<Surd>(Surd(Rational(0)));
        return out;
    }
    if (hi && lo_v > *hi) return out;
    out.empty = false;
    out.lo = Surd(lo_v);
    if (hi) out.hi = Surd(*hi);
    return out;
}

}  // namespace

DilationInterval dilation_interval(const Body& body, const LatticePoint& P) {
    return is_circle(body) ? circle_dilation(as_circle(body), P)
                           : polygon_dilation(as_polygon(body), P);
}

bool body_member(const Body& body, const LatticePoint& P) {
    if (P.is_origin()) return true;
    return dilation_interval(body, P).first_integer(1).has_value();
}

bool RaySemigroup::member_s(long long s) const {
    if (s <= 0) return s == 0;
    if (s < tail_start) return prefix[static_cast<std::size_t>(s)];
    return pattern[static_cast<std::size_t>((s - tail_start) % period)];
}

std::vector<long long> RaySemigroup::prefix_gaps() const {
    std::vector<long long> out;
    for (long long s = 1; s < tail_start; ++s)
        if (!member_s(s)) out.push_back(s);
    return out;
}

namespace {

// Derived quantities shared by every representation: least member, minimal
// generating multiples (complete within tail_start + lcm(period, min)), and
// the single-generator verdict.
void finish_ray(RaySemigroup& r) {
    r.min_member = 0;
    for (long long s = 1; r.min_member == 0; ++s) {
        if (r.member_s(s)) r.min_member = s;
        if (s > r.tail_start + r.period + 2)
            throw InternalError("ray semigroup has no member");
    }
    long long g = std::lcm(r.period, r.min_member);
    long long window = r.tail_start + g;
    // Any member s >= tail_start + lcm decomposes as (s - lcm) + lcm: the lcm
    // is a multiple of the least member and s - lcm shares s's pattern slot.
    std::vector<long long> members;
    for (long long s = 1; s < window; ++s)
        if (r.member_s(s)) members.push_back(s);
    for (long long s : members) {
        bool decomposable = false;
        for (long long a : members) {
            if (a >= s) break;
            if (r.member_s(s - a)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) r.minimal_multiples.push_back(s);
    }
    r.single_generator = r.minimal_multiples.size() == 1;
    r.generator = r.min_member * r.primitive;
    r.weak_criterion = r.member_s(1);
}

long long ceil_to_ll(const Surd& s) { return to_int64(s.ceil()); }

}  // namespace

RaySemigroup build_ray_semigroup(const Semigroup& sg, int which, bool in_sbar) {
    const Cone& cone = sg.cone();
    const Ray& ray = which == 1 ? cone.tau1 : cone.tau2;
    RaySemigroup r;
    r.primitive = which == 1 ? cone.dir1() : cone.dir2();

    if (ray.is_point_contact()) {
        // F ∩ tau = {sigma·p}: s·p ∈ S iff s is a positive multiple of num(sigma).
        const Rational& sigma = ray.point_contact().sigma;
        long long m = to_int64(sigma.num());
        if (!in_sbar) {
            r.tail_start = 1;
            r.period = m;
            r.prefix.assign(1, false);
            r.pattern.resize(static_cast<std::size_t>(m));
            for (long long i = 0; i < m; ++i) r.pattern[static_cast<std::size_t>(i)] = ((i + 1) % m) == 0;
            finish_ray(r);
            return r;
        }
        // Sbar on a point-contact ray: beyond the stable index membership is
        // exactly periodic with period m (same-ray sums shift by whole chords,
        // off-ray sums are eventually guaranteed members).
        long long stable = std::max<long long>(1, sbar_stable_index(sg, which));
        r.tail_start = stable;
        r.period = m;
        r.prefix.assign(static_cast<std::size_t>(stable), false);
        for (long long s = 1; s < stable; ++s)
            r.prefix[static_cast<std::size_t>(s)] = sg.member_sbar(s * r.primitive);
        r.pattern.resize(static_cast<std::size_t>(m));
        for (long long i = 0; i < m; ++i)
            r.pattern[static_cast<std::size_t>(i)] = sg.member_sbar((stable + i) * r.primitive);
        finish_ray(r);
        return r;
    }

    const auto& seg = ray.segment_contact();
    // Chords k·[lo, hi] overlap consecutively from k0 on, so every s >= s0 =
    // ceil(k0·lo) is a member; below s0 test each s via its k-interval.
    Surd width = seg.hi - seg.lo;
    if (width.sign() <= 0) throw InternalError("segment contact with empty width");
    long long k0 = std::max<long long>(1, ceil_to_ll(seg.lo / width));
    long long s0 = std::max<long long>(1, ceil_to_ll(Surd(Rational(k0)) * seg.lo));
    r.tail_start = s0;
    r.period = 1;
    r.pattern.assign(1, true);
    r.prefix.assign(static_cast<std::size_t>(s0), false);
    for (long long s = 1; s < s0; ++s) {
        bool in;
        if (in_sbar) {
            in = sg.member_sbar(s * r.primitive);
        } else {
            Surd sv{Rational(s)};
            in = !integers_in_interval(sv / seg.hi, sv / seg.lo, 1).empty();
        }
        r.prefix[static_cast<std::size_t>(s)] = in;
    }
    finish_ray(r);
    return r;
}

Semigroup::Semigroup(Body body) : body_(std::move(body)), cone_(cone_of(body_)) {}

// Lazy slots use the double-checked pattern: compute without the lock (the
// computations recurse into other slots), first install wins. Results are
// pure functions of the body, so racing first-callers agree.
const GeneratorSet& Semigroup::generators() const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (gens_) return *gens_;
    }
    GeneratorSet g = compute_min_generators(*this);
    std::lock_guard<std::mutex> lock(mu_);
    if (!gens_) gens_ = std::move(g);
    return *gens_;
}

bool Semigroup::member_sbar(const LatticePoint& P) const {
    const GeneratorSet& g = generators();
    for (const auto& n : g.elements)
        if (!member(P + n)) return false;
    return true;
}

const RaySemigroup& Semigroup::ray(int which, bool in_sbar) const {
    if (which != 1 && which != 2) throw InternalError("ray index must be 1 or 2");
    auto& slot = rays_[which - 1][in_sbar ? 1 : 0];
    {
        std::lock_guard<std::mutex> lock(mu_);
        if (slot) return *slot;
    }
    RaySemigroup r = build_ray_semigroup(*this, which, in_sbar);
    std::lock_guard<std::mutex> lock(mu_);
    if (!slot) slot = std::move(r);
    return *slot;
}

}  // namespace cbsg
