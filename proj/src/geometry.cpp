#include "dp1/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "dp1/upoly.hpp"

namespace dp1 {

namespace {

std::vector<std::string> const kSurfaceVars{"x", "y", "z", "w"};
std::vector<std::string> const kBinaryVars{"x", "y"};

bool all_zero(std::vector<FieldElem> const& v) {
    return std::all_of(v.begin(), v.end(), [](FieldElem const& c) { return c.is_zero(); });
}

}  // namespace

WPoint::WPoint(std::vector<FieldElem> c, std::vector<unsigned> w)
    : coords(std::move(c)), weights(std::move(w)) {
    if (coords.size() != weights.size())
        throw std::invalid_argument("WPoint: coordinate/weight arity mismatch");
    if (all_zero(coords)) throw std::invalid_argument("WPoint: all coordinates zero");
}

WPoint WPoint::normalized_field() const {
    for (size_t i = 0; i < coords.size(); ++i) {
        if (weights[i] != 1 || coords[i].is_zero()) continue;
        FieldElem lambda = coords[i].inverse();
        WPoint out = *this;
        for (size_t j = 0; j < coords.size(); ++j)
            out.coords[j] = coords[j] * lambda.pow(weights[j]);
        return out;
    }
    return *this;
}

bool weighted_equal(WPoint const& p, WPoint const& q) {
    if (p.weights != q.weights) return false;
    size_t n = p.coords.size();
    std::vector<size_t> nonzero;
    for (size_t i = 0; i < n; ++i) {
        bool pz = p.coords[i].is_zero(), qz = q.coords[i].is_zero();
        if (pz != qz) return false;
        if (!pz) nonzero.push_back(i);
    }
    auto verify = [&](FieldElem const& lambda) {
        for (size_t i : nonzero)
            if (q.coords[i] != p.coords[i] * lambda.pow(p.weights[i])) return false;
        return true;
    };
    for (size_t i : nonzero)
        if (p.weights[i] == 1) return verify(q.coords[i] / p.coords[i]);
    if (nonzero.size() == 1) return true;
    if (nonzero.size() == 2) {
        size_t i = nonzero[0], j = nonzero[1];
        if (p.weights[i] > p.weights[j]) std::swap(i, j);
        if (p.weights[i] == 2 && p.weights[j] == 3) {
            // lambda = (ratio at weight 3) / (ratio at weight 2)
            FieldElem lambda = (q.coords[j] / p.coords[j]) / (q.coords[i] / p.coords[i]);
            return verify(lambda);
        }
    }
    throw std::logic_error("weighted_equal: unsupported weight pattern");
}

MPoly surface_poly(Surface const& s) {
    MPoly f(kSurfaceVars);
    f.add_term({0, 0, 0, 2}, FieldElem(1));
    f.add_term({0, 0, 3, 0}, FieldElem(-1));
    f.add_term({6, 0, 0, 0}, -s.A);
    f.add_term({0, 6, 0, 0}, -s.B);
    return f;
}

bool same_plane(DualPlane const& a, DualPlane const& b) {
    std::array<FieldElem, 4> u{a.k, a.l, a.m, a.n}, v{b.k, b.l, b.m, b.n};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

DualPlane primitive_plane(DualPlane const& h) {
    std::array<FieldElem, 4> v{h.k, h.l, h.m, h.n};
    Integer den = 1;
    for (auto const& c : v) {
        if (!c.is_rational())
            throw std::invalid_argument("primitive_plane: entries must be rational");
        den = lcm(den, c.a.get_den());
    }
    std::array<Integer, 4> z;
    Integer content = 0;
    for (size_t i = 0; i < 4; ++i) {
        Rational scaled = v[i].a * Rational(den);
        z[i] = scaled.get_num();
        content = gcd(content, z[i]);
    }
    if (content == 0) throw std::invalid_argument("primitive_plane: zero plane");
    for (auto& c : z) c /= content;
    for (auto const& c : z) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& d : z) d = -d;
        break;
    }
    return {FieldElem(Rational(z[0])), FieldElem(Rational(z[1])), FieldElem(Rational(z[2])),
            FieldElem(Rational(z[3]))};
}

bool on_parametrizing_cubic(EPoint const& q) {
    if (q.x0.is_zero() && q.y0.is_zero() && q.z0.is_zero()) return false;
    FieldElem c49(49);
    return (q.z0.pow(3) + c49 * q.x0.pow(3) + c49 * q.y0.pow(3)).is_zero();
}

std::string to_string(Tangency t) {
    switch (t) {
        case Tangency::transverse: return "transverse";
        case Tangency::simple_tangent: return "simple-tangent";
        case Tangency::bitangent: return "bitangent";
        case Tangency::tritangent: return "tritangent";
        case Tangency::higher_order: return "higher-order";
        case Tangency::degenerate: return "degenerate";
    }
    return "?";
}

Tangency classify_multiplicities(std::vector<int> const& mults) {
    int twos = 0;
    for (int m : mults) {
        if (m >= 3) return Tangency::higher_order;
        if (m == 2) ++twos;
    }
    switch (twos) {
        case 0: return Tangency::transverse;
        case 1: return Tangency::simple_tangent;
        case 2: return Tangency::bitangent;
        default: return Tangency::tritangent;
    }
}

bool on_surface(WPoint const& p, Surface const& s) {
    if (p.coords.size() != 4 || p.weights != std::vector<unsigned>{1, 1, 2, 3})
        throw std::invalid_argument("on_surface: expected a point of P(1,1,2,3)");
    FieldElem const &x = p.coords[0], &y = p.coords[1], &z = p.coords[2], &w = p.coords[3];
    return (w * w - z.pow(3) - s.A * x.pow(6) - s.B * y.pow(6)).is_zero();
}

std::array<FieldElem, 4> cone_chart(WPoint const& p) {
    if (p.coords.size() != 3 || p.weights != std::vector<unsigned>{1, 1, 2})
        throw std::invalid_argument("cone_chart: expected a point of P(1,1,2)");
    FieldElem const &x = p.coords[0], &y = p.coords[1], &z = p.coords[2];
    return {x * x, x * y, y * y, z};
}

DualPlane bitangent_plane(WPoint const& p0, Surface const& s) {
    if (p0.coords.size() != 3 || p0.weights != std::vector<unsigned>{1, 1, 2})
        throw std::invalid_argument("bitangent_plane: expected a point of P(1,1,2)");
    FieldElem const &x0 = p0.coords[0], &y0 = p0.coords[1], &z0 = p0.coords[2];
    if (!(z0.pow(3) + s.A * x0.pow(6) + s.B * y0.pow(6)).is_zero())
        throw std::invalid_argument("bitangent_plane: point is not on the branch curve");
    return {s.A * x0.pow(4), FieldElem(0), s.B * y0.pow(4), z0 * z0};
}

DualPlane family_plane(EPoint const& q) {
    FieldElem c49(49);
    return {c49 * q.x0 * q.x0, FieldElem(0), c49 * q.y0 * q.y0, q.z0 * q.z0};
}

MPoly branch_sextic(DualPlane const& h, Surface const& s) {
    if (h.n.is_zero())
        throw std::invalid_argument("branch_sextic: plane through the cone vertex (n = 0)");
    MPoly x = MPoly::variable(kBinaryVars, "x");
    MPoly y = MPoly::variable(kBinaryVars, "y");
    MPoly conic = x * x * h.k + x * y * h.l + y * y * h.m;
    return (x.pow(6) * s.A + y.pow(6) * s.B) * h.n.pow(3) - conic.pow(3);
}

TangencyProfile tangency_profile(MPoly const& phi) {
    if (phi.is_zero())
        throw std::invalid_argument("tangency_profile: zero sextic (plane contains a curve component)");
    if (phi.vars().size() != 2)
        throw std::invalid_argument("tangency_profile: expected a binary form");
    auto deg = phi.wdeg(WeightVector{{1, 1}});
    if (!deg || *deg != 6)
        throw std::invalid_argument("tangency_profile: expected a homogeneous sextic");

    // dehomogenize at y = 1; the degree deficit is the multiplicity at infinity
    std::vector<std::string> xonly{phi.vars()[0]};
    std::map<std::string, MPoly> assign{
        {phi.vars()[0], MPoly::variable(xonly, phi.vars()[0])},
        {phi.vars()[1], MPoly::constant(xonly, FieldElem(1))}};
    MPoly u = phi.subst(assign);

    TangencyProfile out;
    long du = u.is_zero() ? 0 : u.total_degree();
    if (6 - du > 0) out.multiplicities.push_back(static_cast<int>(6 - du));
    if (du >= 1) {
        for (auto const& [factor, mult] : squarefree_decompose_mpoly(u)) {
            long fd = factor.total_degree();
            for (long i = 0; i < fd; ++i) out.multiplicities.push_back(mult);
        }
    }
    std::sort(out.multiplicities.rbegin(), out.multiplicities.rend());
    out.kind = classify_multiplicities(out.multiplicities);
    return out;
}

FamilyCurve family_curve(EPoint const& q) {
    if (!on_parametrizing_cubic(q))
        throw std::invalid_argument("family_curve: point is not on the parametrizing cubic");
    FamilyCurve c;
    c.surface_eq = surface_poly(Surface::base49());
    MPoly plane(kSurfaceVars);
    FieldElem c49(49);
    plane.add_term({2, 0, 0, 0}, c49 * q.x0 * q.x0);
    plane.add_term({0, 2, 0, 0}, c49 * q.y0 * q.y0);
    plane.add_term({0, 0, 1, 0}, q.z0 * q.z0);
    c.plane_eq = plane;
    c.degenerate = q.z0.is_zero();
    return c;
}

bool adjunction_identity_check() {
    std::vector<std::string> vars{"x0", "y0", "x", "y"};
    MPoly x0 = MPoly::variable(vars, "x0"), y0 = MPoly::variable(vars, "y0");
    MPoly x = MPoly::variable(vars, "x"), y = MPoly::variable(vars, "y");
    MPoly lhs = (x0.pow(3) + y0.pow(3)).pow(2) * (x.pow(6) + y.pow(6)) -
                (x0 * x0 * x * x + y0 * y0 * y * y).pow(3);
    MPoly bracket = (x0.pow(3) * y0 * FieldElem(2) + y0.pow(4)) * x * x +
                    (x0.pow(4) + x0 * y0.pow(3) * FieldElem(2)) * y * y;
    MPoly rhs = (y0 * x * x - x0 * y * y).pow(2) * bracket;
    return lhs == rhs;
}

FieldElem section_w_closed_form(EPoint const& q) {
    FieldElem z = FieldElem::zeta();
    FieldElem x3 = q.x0.pow(3), y3 = q.y0.pow(3);
    if ((x3 + y3).is_zero())
        throw std::invalid_argument("section_w_closed_form: degenerate fiber (x0^3 + y0^3 = 0)");
    return FieldElem(7) * (x3 - z * z * y3) * (x3 - z * y3) / (x3 + y3);
}

WPoint section_point(EPoint const& q) {
    if (!on_parametrizing_cubic(q))
        throw std::invalid_argument("section_point: point is not on the parametrizing cubic");
    if ((q.x0.pow(3) + q.y0.pow(3)).is_zero() || q.z0.is_zero() || q.x0.is_zero() || q.y0.is_zero())
        throw std::invalid_argument("section_point: degenerate fiber");
    FieldElem zeta = FieldElem::zeta();
    FieldElem x = zeta * q.y0;
    FieldElem y = q.x0;
    FieldElem z = FieldElem(49) * zeta * q.x0 * q.x0 * q.y0 * q.y0 / (q.z0 * q.z0);
    FieldElem rhs = z.pow(3) + FieldElem(49) * x.pow(6) + FieldElem(49) * y.pow(6);
    auto w = field_sqrt(rhs);
    if (!w)
        throw std::logic_error("section_point: exact square root missing (internal inconsistency)");
    FieldElem closed = section_w_closed_form(q);
    if (*w != closed && *w != -closed)
        throw std::logic_error("section_point: closed form disagrees with the exact square root");
    return WPoint({x, y, z, *w}, {1, 1, 2, 3});
}

bool curve_point_smooth(EPoint const& q, WPoint const& p) {
    FamilyCurve c = family_curve(q);
    if (p.coords.size() != 4 || p.weights != std::vector<unsigned>{1, 1, 2, 3})
        throw std::invalid_argument("curve_point_smooth: expected a point of P(1,1,2,3)");
    std::vector<FieldElem> const& v = p.coords;
    if (!c.surface_eq.eval(v).is_zero() || !c.plane_eq.eval(v).is_zero())
        throw std::invalid_argument("curve_point_smooth: point is not on the curve");
    if (v[0].is_zero() && v[1].is_zero())
        throw std::invalid_argument("curve_point_smooth: no affine chart at x = y = 0");

    std::array<FieldElem, 4> r1, r2;
    for (size_t i = 0; i < 4; ++i) {
        r1[i] = c.surface_eq.partial(kSurfaceVars[i]).eval(v);
        r2[i] = c.plane_eq.partial(kSurfaceVars[i]).eval(v);
    }
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (!(r1[i] * r2[j] - r1[j] * r2[i]).is_zero()) return true;
    return false;
}

std::pair<Rational, int> fujita_invariants(long d) {
    if (d < 1) throw std::invalid_argument("fujita_invariants: degree must be >= 1");
    return {make_rational(2, d), 1};
}

}  // namespace dp1
