#include "cbsg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace cbsg {

namespace {

bool in_dilation(const Body& body, const LatticePoint& P, long long k) {
    if (k == 0) return P.is_origin();
    Rational kk(k);
    if (is_circle(body)) {
        const auto& c = as_circle(body);
        Rational dx = Rational(P.x) - kk * c.center.x;
        Rational dy = Rational(P.y) - kk * c.center.y;
        return dx * dx + dy * dy <= kk * kk * c.radius2();
    }
    const auto& poly = as_polygon(body);
    Vec2Q p{Rational(P.x), Rational(P.y)};
    for (const auto& h : poly.half_planes)
        if (h.eval(p) > kk * h.offset) return false;
    return true;
}

std::pair<Vec2Q, Vec2Q> body_bounds(const Body& body) {
    if (is_circle(body)) {
        const auto& c = as_circle(body);
        return {{c.center.x - c.radius, c.center.y - c.radius},
                {c.center.x + c.radius, c.center.y + c.radius}};
    }
    const auto& poly = as_polygon(body);
    Vec2Q lo = poly.vertices.front(), hi = lo;
    for (const auto& v : poly.vertices) {
        lo = {min(lo.x, v.x), min(lo.y, v.y)};
        hi = {max(hi.x, v.x), max(hi.y, v.y)};
    }
    return {lo, hi};
}

// Extremal ray directions recomputed from scratch (slope extremes for a
// polygon, axis/tangent analysis for a circle); the oracle must not lean on
// the production cone code.
LatticePoint oracle_primitive(const Vec2Q& v) {
    BigInt nx = v.x.num() * v.y.den();
    BigInt ny = v.y.num() * v.x.den();
    BigInt g;
    mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
    return {to_int64(BigInt(nx / g)), to_int64(BigInt(ny / g))};
}

LatticePoint oracle_low_dir(const RationalCircle& c) {
    if (c.center.y < c.radius || c.center.y == c.radius) return {1, 0};
    Rational a = c.center_norm2() - c.radius2();
    auto s = a.sqrt_exact();
    if (!s) throw NotAffine("oracle: irrational tangent direction");
    Vec2Q t = (Rational(1) / c.center_norm2()) *
              ((*s * *s) * c.center - (c.radius * *s) * Vec2Q{-c.center.y, c.center.x});
    return oracle_primitive(t);
}

std::pair<LatticePoint, LatticePoint> oracle_ray_dirs(const Body& body) {
    if (is_circle(body)) {
        const auto& c = as_circle(body);
        LatticePoint low = oracle_low_dir(c);
        RationalCircle r(Vec2Q{c.center.y, c.center.x}, c.radius);
        LatticePoint high = reflect_xy(oracle_low_dir(r));
        return {high, low};
    }
    const auto& poly = as_polygon(body);
    Vec2Q hi = poly.vertices.front(), lo = hi;
    for (const auto& v : poly.vertices) {
        if (v.is_origin()) continue;
        if (hi.is_origin() || cross(hi, v).sign() > 0) hi = v;
        if (lo.is_origin() || cross(lo, v).sign() < 0) lo = v;
    }
    return {oracle_primitive(hi), oracle_primitive(lo)};
}

using MemberCache = std::unordered_map<LatticePoint, bool, LatticePointHash>;

bool cached_member(const Body& body, const LatticePoint& P, long long cap, MemberCache& cache) {
    auto it = cache.find(P);
    if (it != cache.end()) return it->second;
    bool v = brute_member(body, P, cap);
    cache.emplace(P, v);
    return v;
}

LatticePoint least_ray_member(const std::function<bool(const LatticePoint&)>& member,
                              const LatticePoint& dir, long long scan_limit) {
    for (long long s = 1; s <= scan_limit; ++s) {
        LatticePoint p = s * dir;
        if (member(p)) return p;
    }
    throw InternalError("oracle: no semigroup element found on an extremal ray");
}

std::vector<LatticePoint> cone_window(const Body& body, long long radius2) {
    auto [d1, d2] = oracle_ray_dirs(body);
    std::vector<LatticePoint> out;
    long long r = 0;
    while (r * r <= radius2) ++r;
    for (long long x = 0; x <= r; ++x)
        for (long long y = 0; y <= r; ++y) {
            LatticePoint p{x, y};
            if (p.is_origin() || norm2(p) > radius2) continue;
            if (cross(d1, p) > 0 || cross(d2, p) < 0) continue;
            out.push_back(p);
        }
    return out;
}

BruteDecision corollary_scan(const Body& body, long long radius2, long long cap,
                             const std::function<bool(const LatticePoint&)>& member,
                             const LatticePoint& n1, const LatticePoint& n2) {
    BruteDecision out;
    out.holds = true;
    std::vector<LatticePoint> pts = cone_window(body, radius2);
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        long long na = norm2(a), nb = norm2(b);
        if (na != nb) return na < nb;
        return a < b;
    });
    for (const auto& a : pts) {
        if (member(a)) continue;
        if (member(a + n1) && member(a + n2)) {
            out.holds = false;
            out.witness = a;
            return out;
        }
    }
    return out;
}

}  // namespace

bool brute_member(const Body& body, const LatticePoint& P, long long cap) {
    for (long long k = 0; k <= cap; ++k)
        if (in_dilation(body, P, k)) return true;
    return false;
}

TruncatedSemigroup TruncatedSemigroup::build(const Body& body, long long cap) {
    TruncatedSemigroup out{body, cap, {}, {}};
    out.index.insert({0, 0});
    auto [lo, hi] = body_bounds(body);
    for (long long i = 1; i <= cap; ++i) {
        Rational ii(i);
        long long x0 = std::max<long long>(0, to_int64((ii * lo.x).floor()));
        long long x1 = to_int64((ii * hi.x).ceil());
        long long y0 = std::max<long long>(0, to_int64((ii * lo.y).floor()));
        long long y1 = to_int64((ii * hi.y).ceil());
        for (long long x = x0; x <= x1; ++x)
            for (long long y = y0; y <= y1; ++y) {
                LatticePoint p{x, y};
                if (!out.index.count(p) && in_dilation(body, p, i)) out.index.insert(p);
            }
    }
    out.points.assign(out.index.begin(), out.index.end());
    std::sort(out.points.begin(), out.points.end());
    return out;
}

std::vector<LatticePoint> brute_min_generators(const Body& body, long long cap) {
    TruncatedSemigroup trunc = TruncatedSemigroup::build(body, cap);
    std::vector<LatticePoint> out;
    for (const auto& g : trunc.points) {
        if (g.is_origin()) continue;
        bool decomposable = false;
        for (const auto& a : trunc.points) {
            if (a.x > g.x) break;
            if (a.is_origin() || a.y > g.y || a == g) continue;
            LatticePoint rest = g - a;
            if (!rest.is_origin() && trunc.contains(rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.push_back(g);
    }
    return out;
}

BruteDecision brute_cm_check(const Body& body, long long radius2, long long cap) {
    MemberCache cache;
    auto member = [&](const LatticePoint& p) { return cached_member(body, p, cap, cache); };
    auto [d1, d2] = oracle_ray_dirs(body);
    LatticePoint n1 = least_ray_member(member, d1, cap * 4 + 16);
    LatticePoint n2 = least_ray_member(member, d2, cap * 4 + 16);
    return corollary_scan(body, radius2, cap, member, n1, n2);
}

BruteDecision brute_sbar_cm(const Body& body, long long radius2, long long cap) {
    std::vector<LatticePoint> gens = brute_min_generators(body, cap);
    MemberCache cache;
    auto member = [&](const LatticePoint& p) { return cached_member(body, p, cap, cache); };
    auto sbar = [&](const LatticePoint& p) {
        for (const auto& g : gens)
            if (!member(p + g)) return false;
        return true;
    };
    auto [d1, d2] = oracle_ray_dirs(body);
    LatticePoint np1 = least_ray_member(sbar, d1, cap * 4 + 16);
    LatticePoint np2 = least_ray_member(sbar, d2, cap * 4 + 16);
    return corollary_scan(body, radius2, cap, sbar, np1, np2);
}

}  // namespace cbsg
