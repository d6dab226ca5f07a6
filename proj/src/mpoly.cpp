#include "dp1/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace dp1 {

bool GrlexLess::operator()(Exponents const& x, Exponents const& y) const {
    unsigned long dx = std::accumulate(x.begin(), x.end(), 0UL);
    unsigned long dy = std::accumulate(y.begin(), y.end(), 0UL);
    if (dx != dy) return dx < dy;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

MPoly MPoly::constant(std::vector<std::string> vars, FieldElem c) {
    MPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), std::move(c));
    return p;
}

MPoly MPoly::variable(std::vector<std::string> const& vars, std::string const& name) {
    MPoly p(vars);
    Exponents e(vars.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(std::move(e), FieldElem(1));
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    auto const& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

FieldElem MPoly::constant_value() const {
    if (terms_.empty()) return FieldElem(0);
    if (!is_constant()) throw std::logic_error("MPoly::constant_value: not a constant");
    return terms_.begin()->second;
}

void MPoly::add_term(Exponents e, FieldElem c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("MPoly::add_term: arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

size_t MPoly::var_index(std::string const& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw std::invalid_argument("MPoly: unknown variable '" + name + "'");
    return static_cast<size_t>(it - vars_.begin());
}

void MPoly::check_same_vars(MPoly const& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("MPoly: mixing distinct variable orders");
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (auto const& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(MPoly const& o) const {
    check_same_vars(o);
    MPoly r = *this;
    for (auto const& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(MPoly const& o) const {
    check_same_vars(o);
    MPoly r = *this;
    for (auto const& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(MPoly const& o) const {
    check_same_vars(o);
    MPoly r(vars_);
    for (auto const& [e1, c1] : terms_)
        for (auto const& [e2, c2] : o.terms_) {
            Exponents e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(std::move(e), c1 * c2);
        }
    return r;
}

MPoly MPoly::operator*(FieldElem const& s) const {
    MPoly r(vars_);
    if (s.is_zero()) return r;
    for (auto const& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result = MPoly::constant(vars_, FieldElem(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

long MPoly::total_degree() const {
    long d = -1;
    for (auto const& [e, c] : terms_)
        d = std::max(d, static_cast<long>(std::accumulate(e.begin(), e.end(), 0UL)));
    return d;
}

long MPoly::degree_in(std::string const& var) const {
    size_t i = var_index(var);
    long d = -1;
    for (auto const& [e, c] : terms_) d = std::max(d, static_cast<long>(e[i]));
    return d;
}

std::optional<long> MPoly::wdeg(WeightVector const& w) const {
    if (terms_.empty()) throw std::invalid_argument("MPoly::wdeg: zero polynomial");
    if (w.w.size() != vars_.size()) throw std::invalid_argument("MPoly::wdeg: weight arity mismatch");
    std::optional<long> d;
    for (auto const& [e, c] : terms_) {
        long td = 0;
        for (size_t i = 0; i < e.size(); ++i) td += static_cast<long>(w.w[i]) * e[i];
        if (!d) d = td;
        else if (*d != td) return std::nullopt;
    }
    return d;
}

MPoly MPoly::partial(std::string const& var) const {
    size_t i = var_index(var);
    MPoly r(vars_);
    for (auto const& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(std::move(d), c * FieldElem(Rational(static_cast<long>(e[i]))));
    }
    return r;
}

MPoly MPoly::subst(std::map<std::string, MPoly> const& assignment) const {
    if (assignment.empty()) throw std::invalid_argument("MPoly::subst: empty assignment");
    std::vector<std::string> const& target = assignment.begin()->second.vars_;
    for (auto const& [name, val] : assignment)
        if (val.vars_ != target)
            throw std::invalid_argument("MPoly::subst: assignment images mix variable orders");

    std::vector<MPoly const*> image(vars_.size(), nullptr);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignment.find(vars_[i]);
        if (it != assignment.end()) image[i] = &it->second;
    }
    // powers cache per variable
    std::vector<std::vector<MPoly>> powers(vars_.size());

    MPoly result(target);
    for (auto const& [e, c] : terms_) {
        MPoly term = MPoly::constant(target, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!image[i])
                throw std::invalid_argument("MPoly::subst: variable '" + vars_[i] + "' not assigned");
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(MPoly::constant(target, FieldElem(1)));
            while (cache.size() <= e[i]) cache.push_back(cache.back() * *image[i]);
            term = term * cache[e[i]];
        }
        result += term;
    }
    return result;
}

FieldElem MPoly::eval(std::vector<FieldElem> const& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("MPoly::eval: arity mismatch");
    std::vector<std::vector<FieldElem>> powers(vars_.size());
    FieldElem acc(0);
    for (auto const& [e, c] : terms_) {
        FieldElem t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(FieldElem(1));
            while (cache.size() <= e[i]) cache.push_back(cache.back() * point[i]);
            t *= cache[e[i]];
        }
        acc += t;
    }
    return acc;
}

std::optional<size_t> MPoly::univariate_in() const {
    std::optional<size_t> which;
    for (auto const& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) {
                if (which && *which != i) return std::nullopt;
                which = i;
            }
    return which;
}

std::vector<FieldElem> MPoly::dense_univariate(std::string const& var) const {
    size_t vi = var_index(var);
    std::vector<FieldElem> out;
    for (auto const& [e, c] : terms_) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != vi && e[i] > 0)
                throw std::invalid_argument("MPoly::dense_univariate: not univariate in '" + var + "'");
        if (out.size() <= e[vi]) out.resize(e[vi] + 1, FieldElem(0));
        out[e[vi]] = c;
    }
    return out;
}

MPoly MPoly::from_dense(std::vector<std::string> vars, std::string const& var,
                        std::vector<FieldElem> const& coeffs) {
    MPoly p(std::move(vars));
    size_t vi = p.var_index(var);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Exponents e(p.vars_.size(), 0);
        e[vi] = static_cast<unsigned>(i);
        p.add_term(std::move(e), coeffs[i]);
    }
    return p;
}

std::pair<Exponents, FieldElem> MPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("MPoly::leading_term: zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

namespace {

bool is_pure_rational(FieldElem const& c) { return c.b == 0; }
bool is_pure_zeta(FieldElem const& c) { return c.a == 0 && c.b != 0; }

std::string monomial_str(std::vector<std::string> const& vars, Exponents const& e) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto const& [e, c] = *it;
        std::string mon = monomial_str(vars_, e);
        bool first = out.empty();
        std::string piece;
        bool negative = false;
        if (is_pure_rational(c) || is_pure_zeta(c)) {
            Rational mag = is_pure_rational(c) ? c.a : c.b;
            negative = mag < 0;
            Rational abs_mag = negative ? Rational(-mag) : mag;
            std::string coeff;
            if (is_pure_zeta(c)) coeff = (abs_mag == 1) ? "zeta" : to_string(abs_mag) + "*zeta";
            else if (abs_mag != 1 || mon.empty()) coeff = to_string(abs_mag);
            if (coeff.empty()) piece = mon;
            else if (mon.empty()) piece = coeff;
            else piece = coeff + "*" + mon;
        } else {
            piece = "(" + to_string(c) + ")";
            if (!mon.empty()) piece += "*" + mon;
        }
        if (first) out = (negative ? "-" : "") + piece;
        else out += (negative ? " - " : " + ") + piece;
    }
    return out;
}

namespace {

struct PolyParser {
    std::string const& s;
    std::vector<std::string> const& vars;
    size_t pos = 0;

    PolyParser(std::string const& text, std::vector<std::string> const& v) : s(text), vars(v) {}

    void skip_ws() { while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos; }

    bool eat(char ch) {
        skip_ws();
        if (pos < s.size() && s[pos] == ch) { ++pos; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(std::string const& what) {
        throw std::invalid_argument("MPoly::parse: " + what + " at position " +
                                    std::to_string(pos) + " in '" + s + "'");
    }

    unsigned parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
    }

    Rational parse_number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected number");
        size_t mid = pos;
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (dstart == pos) { pos = mid; }  // '/' was not part of the literal
        }
        return rational_from_string(s.substr(start, pos - start));
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
            ++pos;
        if (start == pos) fail("expected identifier");
        return s.substr(start, pos - start);
    }

    MPoly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char ch = s[pos];
        if (ch == '(') {
            ++pos;
            MPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)))
            return MPoly::constant(vars, FieldElem(parse_number()));
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string name = parse_ident();
            if (name == "zeta") return MPoly::constant(vars, FieldElem::zeta());
            return MPoly::variable(vars, name);
        }
        fail("unexpected character");
    }

    MPoly parse_factor() {
        MPoly base = parse_atom();
        if (eat('^')) return base.pow(parse_uint());
        return base;
    }

    MPoly parse_term() {
        MPoly prod = parse_factor();
        while (eat('*')) prod = prod * parse_factor();
        return prod;
    }

    MPoly parse_expr() {
        MPoly acc(vars);
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        while (true) {
            MPoly t = parse_term();
            acc = (sign < 0) ? acc - t : acc + t;
            skip_ws();
            if (pos >= s.size() || s[pos] == ')') break;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else fail("expected '+' or '-'");
        }
        return acc;
    }
};

}  // namespace

MPoly MPoly::parse(std::string const& text, std::vector<std::string> vars) {
    PolyParser p(text, vars);
    MPoly result = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing junk");
    return result;
}

}  // namespace dp1
