#pragma once

/// Plane primitives: integer lattice points and exact rational vectors.

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "cbsg/rational.hpp"

namespace cbsg {

struct LatticePoint {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;  // lexicographic
    friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
    friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
    friend LatticePoint operator*(long long k, LatticePoint p) { return {k * p.x, k * p.y}; }
    bool is_origin() const { return x == 0 && y == 0; }
};

inline long long cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }
inline long long dot(LatticePoint a, LatticePoint b) { return a.x * b.x + a.y * b.y; }
inline long long norm2(LatticePoint a) { return dot(a, a); }

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const {
        return std::hash<long long>{}(p.x * 0x9e3779b97f4a7c15LL ^ p.y);
    }
};

struct Vec2Q {
    Rational x, y;

    Vec2Q() = default;
    Vec2Q(Rational xx, Rational yy) : x(std::move(xx)), y(std::move(yy)) {}
    Vec2Q(const LatticePoint& p) : x(p.x), y(p.y) {}  // NOLINT: implicit by design

    friend bool operator==(const Vec2Q& a, const Vec2Q& b) { return a.x == b.x && a.y == b.y; }
    friend Vec2Q operator+(const Vec2Q& a, const Vec2Q& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2Q operator-(const Vec2Q& a, const Vec2Q& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2Q operator*(const Rational& k, const Vec2Q& v) { return {k * v.x, k * v.y}; }
    Vec2Q operator-() const { return {-x, -y}; }
    bool is_origin() const { return x.is_zero() && y.is_zero(); }
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
};

inline Rational cross(const Vec2Q& a, const Vec2Q& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2Q& a, const Vec2Q& b) { return a.x * b.x + a.y * b.y; }
inline Rational norm2(const Vec2Q& a) { return dot(a, a); }
inline Vec2Q perp_ccw(const Vec2Q& a) { return {-a.y, a.x}; }
inline Vec2Q reflect_xy(const Vec2Q& a) { return {a.y, a.x}; }
inline LatticePoint reflect_xy(const LatticePoint& a) { return {a.y, a.x}; }

std::ostream& operator<<(std::ostream& os, const Vec2Q& v);

/// The unique coprime integer vector on the ray through `direction`.
/// Requires a nonzero direction with nonnegative coordinates.
LatticePoint primitive_vector(const Vec2Q& direction);

/// Same scaling for arbitrary nonzero directions (sign preserved).
LatticePoint primitive_signed(const Vec2Q& direction);

/// Exact conversion when both coordinates are integers.
bool is_lattice(const Vec2Q& v);
LatticePoint to_lattice(const Vec2Q& v);

}  // namespace cbsg
