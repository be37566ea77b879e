#include "cbsg/vec.hpp"

#include <ostream>

namespace cbsg {

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
    return os << "(" << p.x << "," << p.y << ")";
}

std::ostream& operator<<(std::ostream& os, const Vec2Q& v) { return os << v.str(); }

LatticePoint primitive_vector(const Vec2Q& direction) {
    if (direction.is_origin()) throw Error("primitive_vector: zero direction");
    if (direction.x.sign() < 0 || direction.y.sign() < 0)
        throw Error("primitive_vector: direction outside the first quadrant");
    // Clear denominators, then divide out the gcd.
    BigInt q = direction.x.den() * direction.y.den();
    BigInt nx = direction.x.num() * direction.y.den();
    BigInt ny = direction.y.num() * direction.x.den();
    BigInt g;
    mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
    return {to_int64(BigInt(nx / g)), to_int64(BigInt(ny / g))};
}

LatticePoint primitive_signed(const Vec2Q& direction) {
    if (direction.is_origin()) throw Error("primitive_signed: zero direction");
    LatticePoint p = primitive_vector({direction.x.abs(), direction.y.abs()});
    return {direction.x.sign() < 0 ? -p.x : p.x, direction.y.sign() < 0 ? -p.y : p.y};
}

bool is_lattice(const Vec2Q& v) { return v.x.is_integer() && v.y.is_integer(); }

LatticePoint to_lattice(const Vec2Q& v) {
    if (!is_lattice(v)) throw InternalError("to_lattice: non-integral point");
    return {to_int64(v.x.num()), to_int64(v.y.num())};
}

}  // namespace cbsg
