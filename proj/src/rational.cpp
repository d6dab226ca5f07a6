#include "dp1/rational.hpp"

#include <stdexcept>

namespace dp1 {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(Integer const& num, Integer const& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(std::string const& s) {
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(Rational const& q) { return q.get_str(); }
std::string to_string(Integer const& z) { return z.get_str(); }

bool is_integer(Rational const& q) { return q.get_den() == 1; }

bool is_perfect_square(Integer const& z) {
    if (z < 0) return false;
    return mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

std::optional<Rational> rational_sqrt(Rational const& q) {
    if (q < 0) return std::nullopt;
    Integer num = q.get_num(), den = q.get_den();
    if (!is_perfect_square(num) || !is_perfect_square(den)) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return make_rational(rn, rd);
}

Integer nearest_integer(Integer const& p, Integer const& n) {
    if (n <= 0) throw std::invalid_argument("nearest_integer: modulus must be positive");
    Integer q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t(), n.get_mpz_t());
    if (2 * r >= n) q += 1;
    return q;
}

}  // namespace dp1
