#pragma once

#include <optional>
#include <string>

#include "dp1/field.hpp"
#include "dp1/rational.hpp"

namespace dp1 {

/// An element a + b*zeta of Z[zeta], the ring of Eisenstein integers.
struct EisensteinInt {
    Integer a;
    Integer b;

    EisensteinInt() : a(0), b(0) {}
    EisensteinInt(long v) : a(v), b(0) {}  // NOLINT: implicit by design
    EisensteinInt(Integer av, Integer bv) : a(std::move(av)), b(std::move(bv)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_unit() const { return norm() == 1; }
    Integer norm() const { return a * a - a * b + b * b; }

    EisensteinInt operator-() const { return {-a, -b}; }
    EisensteinInt operator+(EisensteinInt const& o) const { return {a + o.a, b + o.b}; }
    EisensteinInt operator-(EisensteinInt const& o) const { return {a - o.a, b - o.b}; }
    EisensteinInt operator*(EisensteinInt const& o) const {
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    bool operator==(EisensteinInt const& o) const { return a == o.a && b == o.b; }
    bool operator!=(EisensteinInt const& o) const { return !(*this == o); }
    bool operator<(EisensteinInt const& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }

    EisensteinInt conj() const { return {a - b, -b}; }

    FieldElem to_field() const { return FieldElem(Rational(a), Rational(b)); }
};

/// Exact quotient x/y in Z[zeta], or nullopt when y does not divide x.
std::optional<EisensteinInt> exact_div(EisensteinInt const& x, EisensteinInt const& y);

bool divides(EisensteinInt const& d, EisensteinInt const& x);

/// Euclidean division rounding each coordinate of x/y to the nearest integer;
/// the remainder x - q*y has norm at most (3/4) norm(y).
EisensteinInt round_div(EisensteinInt const& x, EisensteinInt const& y);

/// Among the six unit multiples of x != 0, the one with a > b >= 0
/// (equivalently: a > 0, b >= 0, smallest b). Zero maps to zero.
EisensteinInt canonical_associate(EisensteinInt const& x);

/// Euclidean gcd, returned as a canonical associate. Throws if both are zero.
EisensteinInt eisenstein_gcd(EisensteinInt x, EisensteinInt y);

std::string to_string(EisensteinInt const& x);

}  // namespace dp1
