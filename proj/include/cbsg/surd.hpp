#pragma once

/// Quadratic irrationals a + b*sqrt(d) with rational a, b, d (d >= 0).
///
/// These carry the endpoints of ray/circle chords exactly. Comparisons are
/// decided by sign analysis and squaring only — no approximation is ever
/// consulted on a decision path. A value collapses to its rational form
/// whenever b = 0 or d is the square of a rational, so b != 0 implies d is a
/// positive non-square.
///
/// Arithmetic is defined within one quadratic field: both operands must be
/// rational or share the same radicand.

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "cbsg/rational.hpp"

namespace cbsg {

class Surd {
public:
    Surd() = default;
    Surd(const Rational& a) : a_(a) {}  // NOLINT: implicit by design
    Surd(int a) : a_(a) {}              // NOLINT
    Surd(const Rational& a, const Rational& b, const Rational& d);

    const Rational& rational_part() const { return a_; }
    const Rational& coefficient() const { return b_; }
    const Rational& radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    const Rational& as_rational() const;

    int sign() const;
    BigInt floor() const;
    BigInt ceil() const;
    double to_double() const;
    std::string str() const;

    Surd operator-() const;
    friend Surd operator+(const Surd& u, const Surd& v);
    friend Surd operator-(const Surd& u, const Surd& v);
    friend Surd operator*(const Surd& u, const Surd& v);
    friend Surd operator/(const Surd& u, const Surd& v);

private:
    Rational a_, b_, d_;  // value = a + b*sqrt(d)
};

/// Total order matching the real numbers represented.
std::strong_ordering compare(const Surd& u, const Surd& v);

inline bool operator==(const Surd& u, const Surd& v) { return compare(u, v) == 0; }
inline bool operator<(const Surd& u, const Surd& v) { return compare(u, v) < 0; }
inline bool operator<=(const Surd& u, const Surd& v) { return compare(u, v) <= 0; }
inline bool operator>(const Surd& u, const Surd& v) { return compare(u, v) > 0; }
inline bool operator>=(const Surd& u, const Surd& v) { return compare(u, v) >= 0; }

Surd min(const Surd& u, const Surd& v);
Surd max(const Surd& u, const Surd& v);

std::ostream& operator<<(std::ostream& os, const Surd& s);

/// The integers k with max(lo, floor_at) <= k <= hi, in increasing order.
std::vector<long long> integers_in_interval(const Surd& lo, const Surd& hi, long long floor_at);

/// The rational of least denominator in [lo, hi] (continued-fraction descent).
/// Requires lo <= hi and, when lo == hi, a rational lo.
Rational simplest_rational_in(const Surd& lo, const Surd& hi);

}  // namespace cbsg
