#pragma once

/// The convex bodies whose dilations generate the semigroups.

#include <variant>

#include "cbsg/polygon.hpp"

namespace cbsg {

struct RationalCircle {
    Vec2Q center;
    Rational radius;  // > 0

    RationalCircle(Vec2Q c, Rational r) : center(std::move(c)), radius(std::move(r)) {
        if (radius.sign() <= 0) throw Error("circle: radius must be positive");
    }

    Rational center_norm2() const { return norm2(center); }
    Rational radius2() const { return radius * radius; }
    /// |c|^2 - r^2; positive exactly when the origin is outside the closed disk.
    Rational origin_power() const { return center_norm2() - radius2(); }
    bool contains(const Vec2Q& p) const { return norm2(p - center) <= radius2(); }
};

using Body = std::variant<RationalCircle, ConvexPolygon>;

inline bool is_circle(const Body& b) { return std::holds_alternative<RationalCircle>(b); }
inline const RationalCircle& as_circle(const Body& b) { return std::get<RationalCircle>(b); }
inline const ConvexPolygon& as_polygon(const Body& b) { return std::get<ConvexPolygon>(b); }

inline Body reflect_xy(const Body& b) {
    if (is_circle(b)) {
        const auto& c = as_circle(b);
        return RationalCircle(reflect_xy(c.center), c.radius);
    }
    return reflect_xy(as_polygon(b));
}

}  // namespace cbsg
