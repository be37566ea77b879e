#include "cbsg/surd.hpp"

#include <cmath>
#include <ostream>

namespace cbsg {

Surd::Surd(const Rational& a, const Rational& b, const Rational& d) : a_(a), b_(b), d_(d) {
    if (d_.sign() < 0) throw Error("surd: negative radicand");
    if (b_.is_zero()) {
        d_ = 0;
        return;
    }
    if (auto r = d_.sqrt_exact()) {
        a_ += b_ * *r;
        b_ = 0;
        d_ = 0;
    }
}

const Rational& Surd::as_rational() const {
    if (!is_rational()) throw InternalError("surd: irrational value used as rational");
    return a_;
}

// Sign of a + b*sqrt(d); after canonicalization b != 0 implies d > 0 and non-square.
int Surd::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    auto cmp = (a_ * a_) <=> (b_ * b_ * d_);
    if (cmp == std::strong_ordering::greater) return sa;
    if (cmp == std::strong_ordering::less) return sb;
    return 0;
}

namespace {

int sign_of_two_radicals(const Rational& A, const Rational& B, const Rational& x,
                         const Rational& C, const Rational& y) {
    // Sign of A + B*sqrt(x) + C*sqrt(y), with B, C nonzero and x, y positive non-squares.
    int sB = B.sign(), sC = C.sign();
    int s1;  // sign of S = B*sqrt(x) + C*sqrt(y)
    if (sB == sC) {
        s1 = sB;
    } else {
        auto c = (B * B * x) <=> (C * C * y);
        s1 = c == std::strong_ordering::greater ? sB : c == std::strong_ordering::less ? sC : 0;
    }
    if (A.is_zero()) return s1;
    if (s1 == 0) return A.sign();
    if (A.sign() == s1) return s1;
    // Opposite signs: decide |A| vs |S| via A^2 - S^2 = D + E*sqrt(xy).
    Rational D = A * A - B * B * x - C * C * y;
    Rational E = Rational(-2) * B * C;
    int t = Surd(D, E, x * y).sign();
    if (t > 0) return A.sign();
    if (t < 0) return s1;
    return 0;
}

std::strong_ordering from_int(int s) {
    return s < 0 ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const Surd& u, const Surd& v) {
    const Rational A = u.rational_part() - v.rational_part();
    const bool ur = u.is_rational(), vr = v.is_rational();
    if (ur && vr) return from_int(A.sign());
    if (ur || vr || u.radicand() == v.radicand()) {
        // Single radical: (A) + (bu - bv)*sqrt(d).
        const Rational& d = ur ? v.radicand() : u.radicand();
        return from_int(Surd(A, u.coefficient() - v.coefficient(), d).sign());
    }
    return from_int(sign_of_two_radicals(A, u.coefficient(), u.radicand(),
                                         -v.coefficient(), v.radicand()));
}

double Surd::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(d_.to_double());
}

BigInt Surd::floor() const {
    if (is_rational()) return a_.floor();
    double seed = to_double();
    BigInt n;
    if (std::isfinite(seed)) {
        mpz_class approx(std::floor(seed));
        n = approx;
    }
    // The seed is only a hint; correct it until n <= *this < n+1 holds exactly.
    while (compare(*this, Surd(Rational(n))) < 0) n -= 1;
    while (compare(*this, Surd(Rational(BigInt(n + 1)))) >= 0) n += 1;
    return n;
}

BigInt Surd::ceil() const { return -((-*this).floor()); }

Surd Surd::operator-() const {
    Surd r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.d_ = d_;
    return r;
}

Surd operator+(const Surd& u, const Surd& v) {
    if (u.is_rational()) return Surd(u.a_ + v.a_, v.b_, v.d_);
    if (v.is_rational()) return Surd(u.a_ + v.a_, u.b_, u.d_);
    if (u.d_ == v.d_) return Surd(u.a_ + v.a_, u.b_ + v.b_, u.d_);
    throw InternalError("surd: mixed radicands in addition");
}

Surd operator-(const Surd& u, const Surd& v) { return u + (-v); }

Surd operator*(const Surd& u, const Surd& v) {
    if (u.is_rational()) return Surd(u.a_ * v.a_, u.a_ * v.b_, v.d_);
    if (v.is_rational()) return Surd(v.a_ * u.a_, v.a_ * u.b_, u.d_);
    if (u.d_ == v.d_)
        return Surd(u.a_ * v.a_ + u.b_ * v.b_ * u.d_, u.a_ * v.b_ + u.b_ * v.a_, u.d_);
    throw InternalError("surd: mixed radicands in multiplication");
}

Surd operator/(const Surd& u, const Surd& v) {
    if (v.sign() == 0) throw InternalError("surd: division by zero");
    if (v.is_rational()) return Surd(u.a_ / v.a_, u.b_ / v.a_, u.d_);
    // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d); the norm is nonzero
    // because d is not a rational square.
    Rational norm = v.a_ * v.a_ - v.b_ * v.b_ * v.d_;
    Surd conj;
    conj.a_ = v.a_ / norm;
    conj.b_ = -v.b_ / norm;
    conj.d_ = v.d_;
    return u * conj;
}

Surd min(const Surd& u, const Surd& v) { return compare(u, v) <= 0 ? u : v; }
Surd max(const Surd& u, const Surd& v) { return compare(u, v) >= 0 ? u : v; }

std::string Surd::str() const {
    if (is_rational()) return a_.str();
    std::string out = a_.is_zero() ? "" : a_.str();
    if (b_.sign() > 0 && !out.empty()) out += "+";
    if (b_ == Rational(-1))
        out += "-";
    else if (!(b_ == Rational(1)))
        out += b_.str() + "*";
    out += "sqrt(" + d_.str() + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

Rational simplest_rational_in(const Surd& lo, const Surd& hi) {
    if (compare(lo, hi) > 0) throw InternalError("simplest_rational_in: empty interval");
    BigInt c = lo.ceil();
    if (compare(Surd(Rational(c)), hi) <= 0) return Rational(c);
    // No integer inside: recurse on the reciprocal of the fractional parts.
    BigInt n = lo.floor();
    Surd one{Rational(1)};
    Rational base{n};
    Rational inner = simplest_rational_in(one / (hi - Surd(base)), one / (lo - Surd(base)));
    return base + Rational(1) / inner;
}

std::vector<long long> integers_in_interval(const Surd& lo, const Surd& hi, long long floor_at) {
    std::vector<long long> out;
    if (compare(lo, hi) > 0) return out;
    BigInt start = lo.ceil();
    BigInt fa = to_bigint(floor_at);
    if (start < fa) start = fa;
    BigInt stop = hi.floor();
    for (BigInt k = start; k <= stop; ++k) out.push_back(to_int64(k));
    return out;
}

}  // namespace cbsg
