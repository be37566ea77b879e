#pragma once

/// Exact arbitrary-precision rationals on top of GMP.
///
/// Invariants: always reduced, denominator > 0, zero is 0/1. Parsing accepts
/// "p/q", plain integers and exact decimal literals ("3.6" becomes 18/5);
/// printing round-trips bit-exactly.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cbsg/errors.hpp"

namespace cbsg {

using BigInt = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT: implicit by design
    Rational(long long n) { v_ = make_mpz(n); }
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long long num, long long den);

    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    BigInt floor() const;
    BigInt ceil() const;

    /// Exact square root if this is the square of a rational.
    std::optional<Rational> sqrt_exact() const;
    bool is_square() const { return sqrt_exact().has_value(); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    double to_double() const { return v_.get_d(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    static mpz_class make_mpz(long long n);

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Checked narrowing; throws InternalError when out of int64 range.
long long to_int64(const BigInt& z);
BigInt to_bigint(long long n);

}  // namespace cbsg
