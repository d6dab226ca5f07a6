#include "dp1/eisenstein.hpp"

#include <array>
#include <stdexcept>

namespace dp1 {

std::optional<EisensteinInt> exact_div(EisensteinInt const& x, EisensteinInt const& y) {
    if (y.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    Integer n = y.norm();
    EisensteinInt p = x * y.conj();
    if (p.a % n != 0 || p.b % n != 0) return std::nullopt;
    return EisensteinInt(p.a / n, p.b / n);
}

bool divides(EisensteinInt const& d, EisensteinInt const& x) {
    if (d.is_zero()) return x.is_zero();
    return exact_div(x, d).has_value();
}

EisensteinInt round_div(EisensteinInt const& x, EisensteinInt const& y) {
    if (y.is_zero()) throw std::invalid_argument("round_div: division by zero");
    Integer n = y.norm();
    EisensteinInt p = x * y.conj();
    return {nearest_integer(p.a, n), nearest_integer(p.b, n)};
}

EisensteinInt canonical_associate(EisensteinInt const& x) {
    if (x.is_zero()) return x;
    // unit multiples: +-x, +-zeta*x, +-zeta^2*x
    EisensteinInt zx(-x.b, x.a - x.b);
    EisensteinInt zzx(x.b - x.a, -x.a);
    std::array<EisensteinInt, 6> orbit{x, -x, zx, -zx, zzx, -zzx};
    for (auto const& c : orbit)
        if (c.a > c.b && c.b >= 0) return c;
    throw std::logic_error("canonical_associate: no representative found");
}

EisensteinInt eisenstein_gcd(EisensteinInt x, EisensteinInt y) {
    if (x.is_zero() && y.is_zero())
        throw std::invalid_argument("eisenstein_gcd: gcd(0, 0) is undefined");
    while (!y.is_zero()) {
        EisensteinInt q = round_div(x, y);
        EisensteinInt r = x - q * y;
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

std::string to_string(EisensteinInt const& x) { return to_string(x.to_field()); }

}  // namespace dp1
