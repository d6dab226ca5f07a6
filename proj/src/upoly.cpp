#include "dp1/upoly.hpp"

#include <stdexcept>

namespace dp1 {

void UPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

FieldElem UPoly::lead() const {
    if (c.empty()) throw std::logic_error("UPoly::lead: zero polynomial");
    return c.back();
}

UPoly UPoly::operator+(UPoly const& o) const {
    std::vector<FieldElem> r(std::max(c.size(), o.c.size()), FieldElem(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(UPoly const& o) const {
    std::vector<FieldElem> r(std::max(c.size(), o.c.size()), FieldElem(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(UPoly const& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<FieldElem> r(c.size() + o.c.size() - 1, FieldElem(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(FieldElem const& s) const {
    if (s.is_zero()) return UPoly();
    std::vector<FieldElem> r = c;
    for (auto& x : r) x *= s;
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

UPoly UPoly::derivative() const {
    if (c.size() <= 1) return UPoly();
    std::vector<FieldElem> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i)
        r[i - 1] = c[i] * FieldElem(Rational(static_cast<long>(i)));
    return UPoly(std::move(r));
}

FieldElem UPoly::eval(FieldElem const& x) const {
    FieldElem acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(UPoly const& d) const {
    if (d.is_zero()) throw std::invalid_argument("UPoly::divmod: division by zero");
    UPoly rem = *this;
    if (rem.degree() < d.degree()) return {UPoly(), rem};
    std::vector<FieldElem> q(rem.degree() - d.degree() + 1, FieldElem(0));
    FieldElem inv = d.lead().inverse();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        FieldElem coef = rem.lead() * inv;
        q[shift] = coef;
        for (int i = 0; i <= d.degree(); ++i)
            rem.c[i + shift] -= coef * d.c[i];
        rem.trim();
    }
    return {UPoly(std::move(q)), rem};
}

UPoly UPoly::exact_div(UPoly const& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("UPoly::exact_div: division not exact");
    return q;
}

UPoly ugcd(UPoly a, UPoly b) {
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("ugcd: gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        UPoly r = a.divmod(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

SquarefreeDecomposition squarefree_decompose(UPoly const& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
    SquarefreeDecomposition out;
    out.lead = f.lead();
    if (f.degree() == 0) return out;
    UPoly fm = f.monic();
    UPoly df = fm.derivative();
    UPoly g = ugcd(fm, df);
    UPoly w = fm.exact_div(g);
    UPoly y = df.exact_div(g);
    UPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        UPoly h = ugcd(w, z);
        if (h.degree() > 0) out.factors.push_back({h, i});
        w = w.exact_div(h);
        y = z.exact_div(h);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

std::optional<MPoly> is_perfect_square(MPoly const& f) {
    if (f.is_zero()) return MPoly(f.vars());
    auto [le, lc] = f.leading_term();
    Exponents half = le;
    for (auto& e : half) {
        if (e % 2 != 0) return std::nullopt;
        e /= 2;
    }
    auto sq = field_sqrt(lc);
    if (!sq) return std::nullopt;

    MPoly g(f.vars());
    g.add_term(half, *sq);
    GrlexLess less;
    // terms of g are extracted in strictly decreasing grlex order below `half`
    Exponents prev = half;
    for (int guard = 0; guard < 20000; ++guard) {
        MPoly r = f - g * g;
        if (r.is_zero()) return g;
        auto [re, rc] = r.leading_term();
        Exponents t(re.size());
        for (size_t i = 0; i < re.size(); ++i) {
            if (re[i] < half[i]) return std::nullopt;
            t[i] = re[i] - half[i];
        }
        if (!less(t, prev)) return std::nullopt;
        MPoly term(f.vars());
        term.add_term(t, rc / (FieldElem(2) * *sq));
        g += term;
        prev = t;
    }
    return std::nullopt;
}

namespace {

std::string univariate_var(MPoly const& f) {
    auto vi = f.univariate_in();
    if (!vi) {
        if (f.is_constant() && !f.vars().empty()) return f.vars().front();
        throw std::invalid_argument("expected a univariate polynomial");
    }
    return f.vars()[*vi];
}

}  // namespace

MPoly ugcd(MPoly const& f, MPoly const& g) {
    if (f.vars() != g.vars())
        throw std::invalid_argument("ugcd: mixing distinct variable orders");
    std::string var;
    if (auto vf = f.univariate_in()) var = f.vars()[*vf];
    else if (auto vg = g.univariate_in()) var = g.vars()[*vg];
    else if (!f.vars().empty()) var = f.vars().front();
    else throw std::invalid_argument("ugcd: no variables");
    UPoly a(f.dense_univariate(var));
    UPoly b(g.dense_univariate(var));
    return MPoly::from_dense(f.vars(), var, ugcd(a, b).c);
}

std::vector<std::pair<MPoly, int>> squarefree_decompose_mpoly(MPoly const& f) {
    std::string var = univariate_var(f);
    auto dec = squarefree_decompose(UPoly(f.dense_univariate(var)));
    std::vector<std::pair<MPoly, int>> out;
    for (auto const& [fac, mult] : dec.factors)
        out.emplace_back(MPoly::from_dense(f.vars(), var, fac.c), mult);
    return out;
}

}  // namespace dp1
