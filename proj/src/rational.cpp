#include "cbsg/rational.hpp"

#include <cctype>
#include <ostream>

namespace cbsg {

mpz_class Rational::make_mpz(long long n) {
    // mpz_class has no long long constructor on LP64-unfriendly paths; go via string once.
    if (n >= INT32_MIN && n <= INT32_MAX) return mpz_class(static_cast<int>(n));
    return mpz_class(std::to_string(n), 10);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw ParseError("rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(make_mpz(num), make_mpz(den)) {}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("rational: empty literal");

    auto fail = [&] { throw ParseError("rational: bad literal '" + text + "'"); };
    std::string sign;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = "-";
        ++i;
    }
    std::string digits_before, digits_after;
    bool seen_dot = false, seen_slash = false;
    std::string den_digits;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (seen_slash)
                den_digits.push_back(c);
            else if (seen_dot)
                digits_after.push_back(c);
            else
                digits_before.push_back(c);
        } else if (c == '.' && !seen_dot && !seen_slash) {
            seen_dot = true;
        } else if (c == '/' && !seen_slash && !seen_dot) {
            seen_slash = true;
        } else {
            fail();
        }
    }
    if (digits_before.empty() && digits_after.empty()) fail();
    if (seen_slash) {
        if (den_digits.empty()) fail();
        BigInt num(sign + (digits_before.empty() ? "0" : digits_before), 10);
        BigInt den(den_digits, 10);
        if (sgn(den) == 0) fail();
        return Rational(num, den);
    }
    // Decimal literals are exact: shift the point into a power-of-ten denominator.
    BigInt num(sign + (digits_before.empty() ? "0" : digits_before) + digits_after, 10);
    BigInt den(1);
    for (std::size_t k = 0; k < digits_after.size(); ++k) den *= 10;
    return Rational(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InternalError("rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

BigInt Rational::ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rational(0);
    BigInt n = num(), d = den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

long long to_int64(const BigInt& z) {
    if (!z.fits_slong_p()) throw InternalError("integer out of int64 range");
    return z.get_si();
}

BigInt to_bigint(long long n) { return Rational(n).num(); }

}  // namespace cbsg
