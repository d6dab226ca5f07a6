#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "dp1/rational.hpp"

namespace dp1 {

/// An element a + b*zeta of k = Q(zeta), where zeta^2 + zeta + 1 = 0.
/// All arithmetic reduces exactly via zeta^2 = -1 - zeta.
struct FieldElem {
    Rational a;
    Rational b;

    FieldElem() : a(0), b(0) {}
    FieldElem(long v) : a(v), b(0) {}  // NOLINT: implicit by design
    FieldElem(Rational v) : a(std::move(v)), b(0) {}
    FieldElem(Rational av, Rational bv) : a(std::move(av)), b(std::move(bv)) {}

    static FieldElem zeta() { return FieldElem(Rational(0), Rational(1)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    FieldElem operator-() const { return FieldElem(-a, -b); }
    FieldElem operator+(FieldElem const& o) const { return FieldElem(a + o.a, b + o.b); }
    FieldElem operator-(FieldElem const& o) const { return FieldElem(a - o.a, b - o.b); }
    FieldElem operator*(FieldElem const& o) const {
        // (a+bz)(c+dz) = ac - bd + (ad + bc - bd) z
        return FieldElem(a * o.a - b * o.b, a * o.b + b * o.a - b * o.b);
    }
    FieldElem operator/(FieldElem const& o) const;
    FieldElem& operator+=(FieldElem const& o) { a += o.a; b += o.b; return *this; }
    FieldElem& operator-=(FieldElem const& o) { a -= o.a; b -= o.b; return *this; }
    FieldElem& operator*=(FieldElem const& o) { *this = *this * o; return *this; }

    bool operator==(FieldElem const& o) const { return a == o.a && b == o.b; }
    bool operator!=(FieldElem const& o) const { return !(*this == o); }
    // Total order for use as a map key (not a field order).
    bool operator<(FieldElem const& o) const {
        if (int c = cmp(a, o.a)) return c < 0;
        return cmp(b, o.b) < 0;
    }

    FieldElem inverse() const;
    FieldElem pow(unsigned long e) const;
};

FieldElem conjugate(FieldElem const& x);  // zeta -> zeta^2
Rational norm(FieldElem const& x);        // a^2 - a*b + b^2 = x * conjugate(x)

/// Exact square root in k if one exists. The returned value (when present)
/// satisfies t*t == c exactly; sign normalized so a > 0, or b > 0 when a == 0.
std::optional<FieldElem> field_sqrt(FieldElem const& c);

/// The two routes behind field_sqrt, exposed for cross-checking.
std::optional<FieldElem> field_sqrt_float_guess(FieldElem const& c);
std::optional<FieldElem> field_sqrt_algebraic(FieldElem const& c);

/// Embedding zeta -> (-1 + sqrt(-3))/2 at the requested decimal precision.
/// Requires precision >= 15.
std::pair<mpf_class, mpf_class> embed_complex(FieldElem const& x, unsigned digits);

/// Double-precision convenience embedding.
std::complex<double> embed(FieldElem const& x);

/// "a+b*zeta" textual form; round-trips through field_from_string.
std::string to_string(FieldElem const& x);
FieldElem field_from_string(std::string const& s);

}  // namespace dp1
