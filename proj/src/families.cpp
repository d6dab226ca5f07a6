#include "dp1/families.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace dp1 {

namespace {

using cd = std::complex<double>;

std::vector<std::string> const kDualVars{"k", "l", "m", "n"};
std::vector<std::string> const kP3Vars{"X", "Y", "Z", "W"};

FieldElem Z() { return FieldElem::zeta(); }

// U = A X^3 + B Z^3 + W^3 and V = X Z - Y^2 in P^3 coordinates.
MPoly cubic_u(Surface const& s) {
    MPoly u(kP3Vars);
    u.add_term({3, 0, 0, 0}, s.A);
    u.add_term({0, 0, 3, 0}, s.B);
    u.add_term({0, 0, 0, 3}, FieldElem(1));
    return u;
}

MPoly quadric_v() {
    MPoly v(kP3Vars);
    v.add_term({1, 0, 1, 0}, FieldElem(1));
    v.add_term({0, 2, 0, 0}, FieldElem(-1));
    return v;
}

cd ceval(MPoly const& f, std::array<cd, 4> const& p) {
    cd acc = 0.0;
    for (auto const& [e, c] : f.terms()) {
        cd t = embed(c);
        for (size_t i = 0; i < 4; ++i)
            for (unsigned j = 0; j < e[i]; ++j) t *= p[i];
        acc += t;
    }
    return acc;
}

double ceval_scale(MPoly const& f, std::array<cd, 4> const& p) {
    double acc = 0.0;
    for (auto const& [e, c] : f.terms()) {
        double t = std::abs(embed(c));
        for (size_t i = 0; i < 4; ++i)
            for (unsigned j = 0; j < e[i]; ++j) t *= std::max(1.0, std::abs(p[i]));
        acc += t;
    }
    return acc;
}

}  // namespace

Involution involution(int i) {
    auto c = [](long v) { return FieldElem(v); };
    FieldElem z = Z(), z2 = Z() * Z();
    switch (i) {
        case 3:
            return {"iota3",
                    {{{c(1), c(0), c(0), c(0)},
                      {c(0), c(-1), c(0), c(0)},
                      {c(0), c(0), c(1), c(0)},
                      {c(0), c(0), c(0), c(1)}}}};
        case 4:
            return {"iota4",
                    {{{c(0), c(0), c(1), c(0)},
                      {c(0), c(1), c(0), c(0)},
                      {c(1), c(0), c(0), c(0)},
                      {c(0), c(0), c(0), c(1)}}}};
        case 5:
            return {"iota5",
                    {{{c(0), c(0), z, c(0)},
                      {c(0), c(1), c(0), c(0)},
                      {z2, c(0), c(0), c(0)},
                      {c(0), c(0), c(0), c(1)}}}};
        case 6:
            return {"iota6",
                    {{{c(0), c(0), z2, c(0)},
                      {c(0), c(1), c(0), c(0)},
                      {z, c(0), c(0), c(0)},
                      {c(0), c(0), c(0), c(1)}}}};
        default:
            throw std::invalid_argument("involution: index must be 3..6");
    }
}

std::array<FieldElem, 4> apply(Involution const& io, std::array<FieldElem, 4> const& p) {
    std::array<FieldElem, 4> out{FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(0)};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) out[i] += io.M[i][j] * p[j];
    return out;
}

bool is_branch_involution(Involution const& io, Surface const& s) {
    // M^2 == identity
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) {
            FieldElem acc(0);
            for (size_t t = 0; t < 4; ++t) acc += io.M[i][t] * io.M[t][j];
            if (acc != FieldElem(i == j ? 1 : 0)) return false;
        }
    // U and V invariant up to scalar
    std::map<std::string, MPoly> assign;
    for (size_t i = 0; i < 4; ++i) {
        MPoly row(kP3Vars);
        for (size_t j = 0; j < 4; ++j) {
            Exponents e(4, 0);
            e[j] = 1;
            row.add_term(std::move(e), io.M[i][j]);
        }
        assign[kP3Vars[i]] = row;
    }
    for (MPoly const& f : {cubic_u(s), quadric_v()}) {
        MPoly g = f.subst(assign);
        FieldElem scalar = g.leading_term().second / f.leading_term().second;
        if (g != f * scalar) return false;
    }
    return true;
}

std::optional<std::array<FieldElem, 4>> fixed_direction(Involution const& io) {
    // D = M - I must have rank 1; the direction spans its column space.
    std::array<std::array<FieldElem, 4>, 4> d = io.M;
    for (size_t i = 0; i < 4; ++i) d[i][i] -= FieldElem(1);
    // rank via 2x2 minors: rank <= 1 iff all vanish
    bool nonzero = false;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            if (!d[i][j].is_zero()) nonzero = true;
    if (!nonzero) return std::nullopt;
    for (size_t i = 0; i < 4; ++i)
        for (size_t ii = i + 1; ii < 4; ++ii)
            for (size_t j = 0; j < 4; ++j)
                for (size_t jj = j + 1; jj < 4; ++jj)
                    if (!(d[i][j] * d[ii][jj] - d[i][jj] * d[ii][j]).is_zero())
                        return std::nullopt;
    for (size_t j = 0; j < 4; ++j) {
        for (size_t i = 0; i < 4; ++i) {
            if (d[i][j].is_zero()) continue;
            // normalize column j by its first nonzero entry
            std::array<FieldElem, 4> dir{FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(0)};
            FieldElem inv = d[i][j].inverse();
            for (size_t t = 0; t < 4; ++t) dir[t] = d[t][j] * inv;
            return dir;
        }
    }
    return std::nullopt;
}

DualComponent component_s(int i) {
    switch (i) {
        case 3:
            return {"S3", MPoly::parse("l", kDualVars),
                    MPoly::parse("k^6 - 2*k^3*m^3 - 2*k^3*n^3 + m^6 - 2*m^3*n^3 + n^6", kDualVars)};
        case 4:
            return {"S4", MPoly::parse("k - m", kDualVars),
                    MPoly::parse("l^6 - 6*l^4*m^2 + 9*l^2*m^4 - 12*l^2*m*n^3 + 4*m^3*n^3 - 4*n^6",
                                 kDualVars)};
        case 5:
            return {"S5", MPoly::parse("k + (zeta + 1)*m", kDualVars),
                    MPoly::parse("l^6 + 6*(zeta + 1)*l^4*m^2 + 9*zeta*l^2*m^4 - "
                                 "12*zeta*l^2*m*n^3 + 4*m^3*n^3 - 4*n^6",
                                 kDualVars)};
        case 6:
            return {"S6", MPoly::parse("k - zeta*m", kDualVars),
                    MPoly::parse("l^6 - 6*zeta*l^4*m^2 - 9*(zeta + 1)*l^2*m^4 + "
                                 "12*(zeta + 1)*l^2*m*n^3 + 4*m^3*n^3 - 4*n^6",
                                 kDualVars)};
        default:
            throw std::invalid_argument("component_s: index must be 3..6");
    }
}

CPlane embed_plane(DualPlane const& h) {
    return {embed(h.k), embed(h.l), embed(h.m), embed(h.n)};
}

bool component_membership(DualPlane const& h, DualComponent const& s) {
    std::vector<FieldElem> p{h.k, h.l, h.m, h.n};
    return s.linear.eval(p).is_zero() && s.sextic.eval(p).is_zero();
}

bool component_membership(CPlane const& h, DualComponent const& s, double tol) {
    std::array<cd, 4> p{h.k, h.l, h.m, h.n};
    for (MPoly const* f : {&s.linear, &s.sextic}) {
        double scale = ceval_scale(*f, p);
        if (std::abs(ceval(*f, p)) > tol * std::max(scale, 1e-30)) return false;
    }
    return true;
}

DualComponent scale_component(DualComponent const& s, Rational const& A) {
    if (A == 0) throw std::invalid_argument("scale_component: A must be nonzero");
    DualComponent out{s.name + "@A=" + to_string(A), s.linear, MPoly(kDualVars)};
    // substitute (k,l,m) -> alpha (k,l,m), n -> n with alpha^3 = 1/A, then
    // multiply by alpha^-6 = A^2; each term's (k,l,m)-degree must be 0 mod 3.
    MPoly scaled(kDualVars);
    for (auto const& [e, c] : s.sextic.terms()) {
        unsigned t = e[0] + e[1] + e[2];
        if (t % 3 != 0)
            throw std::invalid_argument("scale_component: (k,l,m)-degree not divisible by 3");
        Rational factor(1);
        for (unsigned p = 0; p < (6 - t) / 3; ++p) factor *= A;
        scaled.add_term(e, c * FieldElem(factor));
    }
    // primitive rational content
    Integer den = 1;
    for (auto const& [e, c] : scaled.terms()) den = lcm(lcm(den, c.a.get_den()), c.b.get_den());
    Integer content = 0;
    for (auto const& [e, c] : scaled.terms()) {
        content = gcd(content, Rational(c.a * Rational(den)).get_num());
        content = gcd(content, Rational(c.b * Rational(den)).get_num());
    }
    if (content == 0) content = 1;
    out.sextic = scaled * FieldElem(make_rational(den, content));
    return out;
}

std::vector<CPlane> sample_component_points(DualComponent const& s, int count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_component_points: count must be >= 1");

    // the linear form determines one coordinate from the others
    size_t solved = 4;
    std::vector<FieldElem> lin(4, FieldElem(0));
    for (auto const& [e, c] : s.linear.terms()) {
        for (size_t i = 0; i < 4; ++i)
            if (e[i] == 1) lin[i] = c;
    }
    for (size_t i = 0; i < 4; ++i)
        if (!lin[i].is_zero()) {
            solved = i;
            break;
        }
    if (solved == 4) throw std::invalid_argument("sample_component_points: trivial linear form");

    // the sextic is solved for its degree-6 variable
    size_t solve_var = 4;
    for (size_t i = 0; i < 4; ++i)
        if (i != solved && i != 3 && s.sextic.degree_in(kDualVars[i]) == 6) solve_var = i;
    if (solve_var == 4) throw std::invalid_argument("sample_component_points: no degree-6 variable");

    // remaining coordinate (besides n = 1) is drawn rationally
    size_t free_var = 4;
    for (size_t i = 0; i < 3; ++i)
        if (i != solved && i != solve_var) free_var = i;
    if (free_var == 4) throw std::invalid_argument("sample_component_points: no free coordinate");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-24, 24);
    std::uniform_int_distribution<long> den(1, 8);

    std::vector<CPlane> out;
    int failures = 0;
    while (static_cast<int>(out.size()) < count) {
        Rational mval(num(rng), den(rng));
        mval.canonicalize();
        if (mval == 0) continue;

        // coordinates as exact field elements where possible
        std::vector<FieldElem> coord(4, FieldElem(0));
        coord[3] = FieldElem(1);
        coord[free_var] = FieldElem(mval);
        // solved = -(sum of other linear terms)/lin[solved]
        FieldElem acc(0);
        for (size_t i = 0; i < 4; ++i)
            if (i != solved) acc += lin[i] * coord[i];
        coord[solved] = -acc / lin[solved];
        // note: when solve_var appears in the linear form this would couple the
        // equations; the printed components never do that
        std::map<std::string, MPoly> assign;
        std::vector<std::string> sv{kDualVars[solve_var]};
        for (size_t i = 0; i < 4; ++i)
            assign[kDualVars[i]] = (i == solve_var) ? MPoly::variable(sv, kDualVars[i])
                                                    : MPoly::constant(sv, coord[i]);
        MPoly uni = s.sextic.subst(assign);
        if (uni.is_zero() || uni.total_degree() < 1) {
            if (++failures > 50 * count)
                throw std::runtime_error("sample_component_points: degenerate specialization at " +
                                         to_string(FieldElem(mval)));
            continue;
        }

        std::vector<cd> coeffs;
        for (auto const& c : uni.dense_univariate(kDualVars[solve_var])) coeffs.push_back(embed(c));
        std::vector<cd> roots;
        try {
            roots = aberth_roots(coeffs);
        } catch (std::runtime_error const&) {
            if (++failures > 50 * count)
                throw std::runtime_error("sample_component_points: solver failure at specialization " +
                                         to_string(FieldElem(mval)));
            continue;
        }

        std::array<cd, 4> p;
        for (size_t i = 0; i < 4; ++i) p[i] = embed(coord[i]);
        bool emitted = false;
        for (size_t ri = 0; ri < roots.size() && !emitted; ++ri) {
            p[solve_var] = roots[(out.size() + ri) % roots.size()];
            CPlane cand{p[0], p[1], p[2], p[3]};
            if (component_membership(cand, s, 1e-10)) {
                out.push_back(cand);
                emitted = true;
            }
        }
        if (!emitted && ++failures > 50 * count)
            throw std::runtime_error("sample_component_points: no residual-clean root at " +
                                     to_string(FieldElem(mval)));
    }
    return out;
}

TangencyProfile verify_bitangency_numeric(CPlane const& h, Surface const& s, double tol) {
    if (std::abs(h.n) <= tol)
        throw std::invalid_argument("verify_bitangency_numeric: plane through the cone vertex");

    // phi(x, 1) = n^3 (A x^6 + B) - (k x^2 + l x + m)^3
    std::array<cd, 7> phi{};
    std::array<cd, 3> conic{h.m, h.l, h.k};
    std::array<cd, 7> cube{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int t = 0; t < 3; ++t) cube[i + j + t] += conic[i] * conic[j] * conic[t];
    cd n3 = h.n * h.n * h.n;
    for (int i = 0; i < 7; ++i) phi[i] = -cube[i];
    phi[6] += n3 * embed(s.A);
    phi[0] += n3 * embed(s.B);

    double scale = 0.0;
    for (auto const& c : phi) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) throw std::invalid_argument("verify_bitangency_numeric: zero sextic");

    std::vector<cd> coeffs(phi.begin(), phi.end());
    int at_infinity = 0;
    while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-12 * scale) {
        coeffs.pop_back();
        ++at_infinity;
    }

    TangencyProfile out;
    if (at_infinity > 0) out.multiplicities.push_back(at_infinity);
    if (coeffs.size() > 1) {
        auto clusters = cluster_roots(aberth_roots(coeffs), tol);
        for (auto const& c : clusters) out.multiplicities.push_back(c.multiplicity);
    }
    std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
    out.kind = classify_multiplicities(out.multiplicities);
    return out;
}

namespace {

template <typename T>
std::array<T, 4> grad_u(std::array<T, 4> const& p, T const& a, T const& b) {
    return {a * T(3) * p[0] * p[0], T(0), b * T(3) * p[2] * p[2], T(3) * p[3] * p[3]};
}

template <typename T>
std::array<T, 4> grad_v(std::array<T, 4> const& p) {
    return {p[2], T(-2) * p[1], p[0], T(0)};
}

}  // namespace

DualPlane plane_through_tangent_and_direction(std::array<FieldElem, 4> const& p,
                                              std::array<FieldElem, 4> const& d, Surface const& s) {
    FieldElem u = s.A * p[0].pow(3) + s.B * p[2].pow(3) + p[3].pow(3);
    FieldElem v = p[0] * p[2] - p[1] * p[1];
    if (!u.is_zero() || !v.is_zero())
        throw std::invalid_argument("plane_through_tangent_and_direction: point not on B");
    auto gu = grad_u<FieldElem>(p, s.A, s.B);
    auto gv = grad_v<FieldElem>(p);
    FieldElem alpha(0), beta(0);
    for (size_t i = 0; i < 4; ++i) {
        alpha += gv[i] * d[i];
        beta -= gu[i] * d[i];
    }
    std::array<FieldElem, 4> h;
    bool nonzero = false;
    for (size_t i = 0; i < 4; ++i) {
        h[i] = alpha * gu[i] + beta * gv[i];
        if (!h[i].is_zero()) nonzero = true;
    }
    if (!nonzero)
        throw std::invalid_argument("plane_through_tangent_and_direction: degenerate span");
    return {h[0], h[1], h[2], h[3]};
}

CPlane plane_through_tangent_and_direction(std::array<cd, 4> const& p, std::array<cd, 4> const& d,
                                           Surface const& s) {
    cd a = embed(s.A), b = embed(s.B);
    auto gu = grad_u<cd>(p, a, b);
    auto gv = grad_v<cd>(p);
    cd alpha = 0.0, beta = 0.0;
    for (size_t i = 0; i < 4; ++i) {
        alpha += gv[i] * d[i];
        beta -= gu[i] * d[i];
    }
    std::array<cd, 4> h;
    double scale = 0.0;
    for (size_t i = 0; i < 4; ++i) {
        h[i] = alpha * gu[i] + beta * gv[i];
        scale = std::max(scale, std::abs(gu[i]) + std::abs(gv[i]));
    }
    double hnorm = 0.0;
    for (auto const& c : h) hnorm = std::max(hnorm, std::abs(c));
    if (hnorm < 1e-12 * scale * scale)
        throw std::invalid_argument("plane_through_tangent_and_direction: degenerate span");
    return {h[0], h[1], h[2], h[3]};
}

}  // namespace dp1
