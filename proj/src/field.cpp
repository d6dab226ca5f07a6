#include "dp1/field.hpp"

#include <cctype>
#include <stdexcept>

namespace dp1 {

FieldElem FieldElem::inverse() const {
    Rational n = norm(*this);
    if (n == 0) throw std::invalid_argument("FieldElem::inverse: zero element");
    FieldElem c = conjugate(*this);
    return FieldElem(c.a / n, c.b / n);
}

FieldElem FieldElem::operator/(FieldElem const& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(unsigned long e) const {
    FieldElem result(1);
    FieldElem base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

FieldElem conjugate(FieldElem const& x) { return FieldElem(x.a - x.b, -x.b); }

Rational norm(FieldElem const& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

namespace {

FieldElem canonical_sqrt_sign(FieldElem t) {
    if (t.a < 0 || (t.a == 0 && t.b < 0)) return -t;
    return t;
}

// Best rational approximation of x with denominator <= bound, by continued
// fractions (convergents only; callers verify the result exactly).
Rational approx_with_den_bound(mpf_class const& x, Integer const& bound) {
    mpq_class exact(x);
    exact.canonicalize();
    if (exact.get_den() <= bound) return exact;
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Rational rest = exact;
    for (int steps = 0; steps < 512; ++steps) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num().get_mpz_t(), rest.get_den().get_mpz_t());
        Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > bound) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        Rational frac = rest - Rational(a);
        if (frac == 0) break;
        rest = Rational(1) / frac;
    }
    if (q1 == 0) return Rational(0);
    return make_rational(p1, q1);
}

}  // namespace

std::optional<FieldElem> field_sqrt_float_guess(FieldElem const& c) {
    if (c.is_zero()) return FieldElem(0);
    auto [re, im] = embed_complex(c, 60);
    // complex square root of re + im*i
    mpf_class r2 = re * re + im * im;
    mpf_class r(0, 256);
    mpf_sqrt(r.get_mpf_t(), r2.get_mpf_t());
    mpf_class tre2 = (r + re) / 2, tim2 = (r - re) / 2;
    if (tre2 < 0) tre2 = 0;
    if (tim2 < 0) tim2 = 0;
    mpf_class tre(0, 256), tim(0, 256);
    mpf_sqrt(tre.get_mpf_t(), tre2.get_mpf_t());
    mpf_sqrt(tim.get_mpf_t(), tim2.get_mpf_t());
    if (im < 0) tim = -tim;
    // invert zeta -> (-1+sqrt(3) i)/2: b = 2*im/sqrt(3), a = re + b/2
    mpf_class three(3, 256), s3(0, 256);
    mpf_sqrt(s3.get_mpf_t(), three.get_mpf_t());
    mpf_class bf = 2 * tim / s3;
    mpf_class af = tre + bf / 2;
    Integer bound = 2 * lcm(c.a.get_den(), c.b.get_den());
    FieldElem t(approx_with_den_bound(af, bound), approx_with_den_bound(bf, bound));
    if (t * t == c) return canonical_sqrt_sign(t);
    return std::nullopt;
}

std::optional<FieldElem> field_sqrt_algebraic(FieldElem const& c) {
    if (c.is_zero()) return FieldElem(0);
    Rational const& u = c.a;
    Rational const& v = c.b;
    if (v == 0) {
        if (auto s = rational_sqrt(u)) return canonical_sqrt_sign(FieldElem(*s));
        // u = -3 q^2 gives t = q*(1 + 2 zeta), since (1+2 zeta)^2 = -3.
        if (auto q = rational_sqrt(-u / 3))
            return canonical_sqrt_sign(FieldElem(*q, 2 * *q));
        return std::nullopt;
    }
    // t = a + b*zeta with t^2 = c forces a^2 - b^2 = u and 2ab - b^2 = v,
    // hence B = b^2 satisfies 3B^2 + (4u - 2v)B - v^2 = 0.
    Rational p = 4 * u - 2 * v;
    Rational disc = p * p + 12 * v * v;
    auto sq = rational_sqrt(disc);
    if (!sq) return std::nullopt;
    Rational B = (-p + *sq) / 6;
    if (B <= 0) return std::nullopt;
    auto b = rational_sqrt(B);
    if (!b) return std::nullopt;
    Rational a = (v + B) / (2 * *b);
    FieldElem t(a, *b);
    if (t * t == c) return canonical_sqrt_sign(t);
    return std::nullopt;
}

std::optional<FieldElem> field_sqrt(FieldElem const& c) {
    // Float guess is cheap when it works; the algebraic criterion is the
    // authority for absence.
    if (auto t = field_sqrt_float_guess(c)) return t;
    return field_sqrt_algebraic(c);
}

std::pair<mpf_class, mpf_class> embed_complex(FieldElem const& x, unsigned digits) {
    if (digits < 15) throw std::invalid_argument("embed_complex: precision must be >= 15 digits");
    unsigned prec = static_cast<unsigned>(digits * 3.33) + 32;
    mpf_class a(x.a, prec), b(x.b, prec);
    mpf_class three(3, prec), s3(0, prec);
    mpf_sqrt(s3.get_mpf_t(), three.get_mpf_t());
    mpf_class re = a - b / 2;
    mpf_class im = b * s3 / 2;
    return {re, im};
}

std::complex<double> embed(FieldElem const& x) {
    double a = x.a.get_d(), b = x.b.get_d();
    return {a - b / 2, b * 0.8660254037844386467637231707529};
}

std::string to_string(FieldElem const& x) {
    if (x.b == 0) return to_string(x.a);
    std::string zpart;
    if (x.b == 1) zpart = "zeta";
    else if (x.b == -1) zpart = "-zeta";
    else zpart = to_string(x.b) + "*zeta";
    if (x.a == 0) return zpart;
    if (x.b > 0) return to_string(x.a) + "+" + zpart;
    return to_string(x.a) + zpart;  // zpart carries its own '-'
}

namespace {

struct FieldParser {
    std::string const& s;
    size_t pos = 0;

    explicit FieldParser(std::string const& str) : s(str) {}

    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    bool peek_zeta() {
        skip_ws();
        return s.compare(pos, 4, "zeta") == 0;
    }

    Rational parse_number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        if (start == pos) throw std::invalid_argument("field_from_string: expected number in '" + s + "'");
        return rational_from_string(s.substr(start, pos - start));
    }

    // term := [number ['*' 'zeta']] | 'zeta'
    FieldElem parse_term() {
        if (peek_zeta()) {
            pos += 4;
            return FieldElem::zeta();
        }
        Rational r = parse_number();
        size_t save = pos;
        if (eat('*')) {
            if (peek_zeta()) {
                pos += 4;
                return FieldElem(Rational(0), r);
            }
            pos = save;
        }
        return FieldElem(r);
    }

    FieldElem parse() {
        FieldElem acc(0);
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        while (true) {
            FieldElem t = parse_term();
            acc += (sign < 0) ? -t : t;
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else throw std::invalid_argument("field_from_string: trailing junk in '" + s + "'");
        }
        return acc;
    }
};

}  // namespace

FieldElem field_from_string(std::string const& s) {
    FieldParser p(s);
    return p.parse();
}

}  // namespace dp1
