#include "cbsg/region.hpp"

#include <algorithm>
#include <optional>

#include "cbsg/polygon.hpp"

namespace cbsg {

namespace {

Rational eval(const LatticePoint& n, const Vec2Q& p) {
    return Rational(n.x) * p.x + Rational(n.y) * p.y;
}

bool satisfies_closed(const Constraint& c, const Vec2Q& p) { return eval(c.normal, p) <= c.offset; }

std::optional<Vec2Q> pair_vertex(const Constraint& a, const Constraint& b) {
    long long det = cross(a.normal, b.normal);
    if (det == 0) return std::nullopt;
    Rational d(det);
    Rational x = (a.offset * Rational(b.normal.y) - b.offset * Rational(a.normal.y)) / d;
    Rational y = (Rational(a.normal.x) * b.offset - Rational(b.normal.x) * a.offset) / d;
    return Vec2Q{x, y};
}

// Nonzero d with n·d <= 0 for every constraint normal n, if one exists. The
// recession cone of a 2D halfplane system is polyhedral, so it is nontrivial
// iff it contains a rotation or negation of some normal.
bool recession_nontrivial(const std::vector<Constraint>& cs) {
    if (cs.empty()) return true;
    std::vector<LatticePoint> candidates;
    for (const auto& c : cs) {
        candidates.push_back({-c.normal.y, c.normal.x});
        candidates.push_back({c.normal.y, -c.normal.x});
        candidates.push_back({-c.normal.x, -c.normal.y});
    }
    for (const auto& d : candidates) {
        if (d.x == 0 && d.y == 0) continue;
        bool ok = true;
        for (const auto& c : cs)
            if (dot(c.normal, d) > 0) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace

void LatticeRegion::add_side(const Vec2Q& p, const Vec2Q& dir, const Vec2Q& inside, bool strict) {
    LatticePoint n = primitive_signed({dir.y, -dir.x});
    Rational b = eval(n, p);
    if (eval(n, inside) > b) {
        n = {-n.x, -n.y};
        b = -b;
    } else if (eval(n, inside) == b) {
        throw InternalError("add_side: interior witness lies on the line");
    }
    add(n, b, strict);
}

bool LatticeRegion::contains(const Vec2Q& p) const {
    for (const auto& c : constraints) {
        Rational v = eval(c.normal, p);
        if (c.strict ? !(v < c.offset) : !(v <= c.offset)) return false;
    }
    return true;
}

LatticeRegion LatticeRegion::hull_region(const std::vector<Vec2Q>& points, bool open) {
    std::vector<Vec2Q> hull = convex_hull(points);
    if (hull.size() < 3) throw InternalError("hull_region: degenerate hull");
    LatticeRegion region;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Vec2Q& v = hull[i];
        const Vec2Q& w = hull[(i + 1) % hull.size()];
        Vec2Q e = w - v;
        LatticePoint n = primitive_signed({e.y, -e.x});
        region.add(n, eval(n, v), open);
    }
    return region;
}

std::vector<LatticePoint> enumerate_lattice(const LatticeRegion& region) {
    const auto& cs = region.constraints;

    // Feasibility probes: pairwise vertices, per-constraint boundary feet, origin.
    std::vector<Vec2Q> probes{Vec2Q{Rational(0), Rational(0)}};
    std::vector<Vec2Q> vertices;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Rational nn(norm2(cs[i].normal));
        probes.push_back((cs[i].offset / nn) * Vec2Q(cs[i].normal));
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (auto v = pair_vertex(cs[i], cs[j])) {
                probes.push_back(*v);
                vertices.push_back(*v);
            }
    }
    auto feasible_closed = [&](const Vec2Q& p) {
        return std::all_of(cs.begin(), cs.end(), [&](const Constraint& c) { return satisfies_closed(c, p); });
    };
    bool nonempty = std::any_of(probes.begin(), probes.end(), feasible_closed);
    if (!nonempty) return {};
    if (recession_nontrivial(cs)) throw Unbounded("lattice region is unbounded");

    // Bounded and nonempty: the feasible pairwise vertices span the region.
    std::optional<Rational> xmin, xmax;
    for (const auto& v : vertices) {
        if (!feasible_closed(v)) continue;
        if (!xmin || v.x < *xmin) xmin = v.x;
        if (!xmax || v.x > *xmax) xmax = v.x;
    }
    if (!xmin) return {};

    std::vector<LatticePoint> out;
    long long x0 = to_int64(xmin->ceil()), x1 = to_int64(xmax->floor());
    for (long long x = x0; x <= x1; ++x) {
        // Exact y-interval at this x, honoring strict flags.
        std::optional<BigInt> ylo, yhi;
        bool dead = false;
        for (const auto& c : cs) {
            Rational rhs = c.offset - Rational(c.normal.x) * Rational(x);
            if (c.normal.y == 0) {
                int s = rhs.sign();
                if (s < 0 || (c.strict && s == 0)) {
                    dead = true;
                    break;
                }
                continue;
            }
            Rational bound = rhs / Rational(c.normal.y);
            if (c.normal.y > 0) {  // y <= bound (or <)
                BigInt b = c.strict ? (bound.is_integer() ? BigInt(bound.num() - 1) : bound.floor())
                                    : bound.floor();
                if (!yhi || b < *yhi) yhi = b;
            } else {  // y >= bound (or >)
                BigInt b = c.strict ? (bound.is_integer() ? BigInt(bound.num() + 1) : bound.ceil())
                                    : bound.ceil();
                if (!ylo || b > *ylo) ylo = b;
            }
        }
        if (dead || !ylo || !yhi) {
            if (!dead && (!ylo || !yhi)) throw Unbounded("lattice region is unbounded in y");
            continue;
        }
        for (BigInt y = *ylo; y <= *yhi; ++y) out.push_back({x, to_int64(y)});
    }
    return out;
}

std::vector<LatticePoint> lattice_points_on_segment(const Vec2Q& a, const Vec2Q& b) {
    std::vector<LatticePoint> out;
    if (a == b) {
        if (is_lattice(a)) out.push_back(to_lattice(a));
        return out;
    }
    Vec2Q d = b - a;
    long long x0 = to_int64(min(a.x, b.x).ceil()), x1 = to_int64(max(a.x, b.x).floor());
    long long y0 = to_int64(min(a.y, b.y).ceil()), y1 = to_int64(max(a.y, b.y).floor());
    for (long long x = x0; x <= x1; ++x)
        for (long long y = y0; y <= y1; ++y) {
            Vec2Q p{Rational(x), Rational(y)};
            if (!cross(d, p - a).is_zero()) continue;
            Rational t = d.x.is_zero() ? (p.y - a.y) / d.y : (p.x - a.x) / d.x;
            if (t.sign() >= 0 && t <= Rational(1)) out.push_back({x, y});
        }
    std::sort(out.begin(), out.end());
    return out;
}

Vec2Q line_intersection(const LineQ& l1, const LineQ& l2) {
    Rational det = cross(l1.dir, l2.dir);
    if (det.is_zero()) throw NoIntersection("parallel lines");
    Rational s = cross(l2.point - l1.point, l2.dir) / det;
    return l1.point + s * l1.dir;
}

std::pair<Vec2Q, Vec2Q> scaled_segment(long long i, const std::pair<Vec2Q, Vec2Q>& seg) {
    Rational k{i};
    return {k * seg.first, k * seg.second};
}

SegmentMeet segments_intersect(const Vec2Q& a1, const Vec2Q& b1, const Vec2Q& a2, const Vec2Q& b2) {
    SegmentMeet m;
    Vec2Q r = b1 - a1, s = b2 - a2;
    Rational rxs = cross(r, s);
    Vec2Q qp = a2 - a1;
    if (rxs.is_zero()) {
        if (!cross(qp, r).is_zero()) return m;  // parallel, distinct lines
        Rational rr = norm2(r);
        if (rr.is_zero()) {  // segment 1 is a point
            if (norm2(s).is_zero()) {
                if (a1 == a2) m = {false, a1, a1};
                return m;
            }
            return segments_intersect(a2, b2, a1, b1);
        }
        Rational t0 = dot(qp, r) / rr;
        Rational t1 = t0 + dot(s, r) / rr;
        if (t0 > t1) std::swap(t0, t1);
        Rational lo = max(t0, Rational(0)), hi = min(t1, Rational(1));
        if (lo > hi) return m;
        m = {false, a1 + lo * r, a1 + hi * r};
        return m;
    }
    Rational t = cross(qp, s) / rxs;
    Rational u = cross(qp, r) / rxs;
    if (t.sign() < 0 || t > Rational(1) || u.sign() < 0 || u > Rational(1)) return m;
    Vec2Q p = a1 + t * r;
    m = {false, p, p};
    return m;
}

}  // namespace cbsg
