#include "doctest.h"
#include "dp1/geometry.hpp"
#include "dp1/elliptic.hpp"
#include "dp1/upoly.hpp"

using namespace dp1;

namespace {

FieldElem Z() { return FieldElem::zeta(); }

WPoint surf_point(FieldElem x, FieldElem y, FieldElem z, FieldElem w) {
    return WPoint({std::move(x), std::move(y), std::move(z), std::move(w)}, {1, 1, 2, 3});
}

WPoint cone_point(FieldElem x, FieldElem y, FieldElem z) {
    return WPoint({std::move(x), std::move(y), std::move(z)}, {1, 1, 2});
}

EPoint const kQ1{FieldElem(2), FieldElem(-1), FieldElem(-7)};
EPoint const kQ2{FieldElem(5), FieldElem(4), FieldElem(-21)};
EPoint const kQ3{FieldElem(-17), FieldElem(73), FieldElem(-266)};

}  // namespace

TEST_CASE("weighted equality") {
    CHECK(weighted_equal(surf_point(1, 2, 3, 4), surf_point(2, 4, 12, 32)));  // lambda = 2
    CHECK_FALSE(weighted_equal(surf_point(1, 2, 3, 4), surf_point(2, 4, 12, 16)));
    // (0,0,1,1) and (0,0,1,-1) coincide: lambda = -1
    CHECK(weighted_equal(surf_point(0, 0, 1, 1), surf_point(0, 0, 1, -1)));
    CHECK(weighted_equal(surf_point(0, 0, 1, 1), surf_point(0, 0, 4, 8)));
    CHECK_FALSE(weighted_equal(surf_point(0, 0, 1, 1), surf_point(0, 0, 1, 2)));
    // unit scaling lambda = zeta
    WPoint p = surf_point(-Z(), 2, FieldElem(4) * Z(), 57);
    WPoint q = surf_point(-Z() * Z(), FieldElem(2) * Z(), FieldElem(4) * Z().pow(3), 57);
    CHECK(weighted_equal(p, q));
}

TEST_CASE("on_surface") {
    Surface s = Surface::base49();
    CHECK(on_surface(surf_point(0, 1, 0, 7), s));
    CHECK(on_surface(surf_point(-Z(), 2, FieldElem(4) * Z(), 57), s));
    CHECK_FALSE(on_surface(surf_point(1, 1, 1, 1), s));
    // invariance under weighted rescaling
    FieldElem lam(make_rational(3, 2));
    CHECK(on_surface(surf_point(-Z() * lam, FieldElem(2) * lam, FieldElem(4) * Z() * lam * lam,
                                FieldElem(57) * lam.pow(3)),
                     s));
}

TEST_CASE("cone_chart") {
    auto im1 = cone_chart(cone_point(1, 0, 5));
    CHECK((im1 == std::array<FieldElem, 4>{1, 0, 0, 5}));
    auto im2 = cone_chart(cone_point(1, 1, 0));
    CHECK((im2 == std::array<FieldElem, 4>{1, 1, 1, 0}));
    auto im3 = cone_chart(cone_point(2, -1, 5));
    CHECK((im3 == std::array<FieldElem, 4>{4, -2, 1, 5}));
    // image satisfies Y^2 = XZ
    CHECK(im3[1] * im3[1] == im3[0] * im3[2]);
}

TEST_CASE("bitangent_plane formula and exact bitangency on an explicit branch point") {
    // On w^2 = z^3 - 4x^6 - 4y^6 the branch curve contains (1, 1, 2).
    Surface s{FieldElem(-4), FieldElem(-4)};
    WPoint p0 = cone_point(1, 1, 2);
    DualPlane h = bitangent_plane(p0, s);
    CHECK(same_plane(h, DualPlane{FieldElem(1), FieldElem(0), FieldElem(1), FieldElem(-1)}));
    // its restriction sextic is -192 (x^2 - y^2)^2 (x^2 + y^2): bitangent
    MPoly phi = branch_sextic(h, s);
    auto prof = tangency_profile(phi);
    CHECK(prof.kind == Tangency::bitangent);
    // the Y-involution image gives the same plane
    WPoint p0i = cone_point(1, -1, 2);
    CHECK(same_plane(bitangent_plane(p0i, s), h));

    CHECK_THROWS(bitangent_plane(cone_point(1, 1, 1), s));
}

TEST_CASE("family_plane matches the paper's base example") {
    DualPlane h = family_plane(kQ1);
    DualPlane target{FieldElem(4), FieldElem(0), FieldElem(1), FieldElem(1)};
    CHECK(same_plane(h, target));
    DualPlane prim = primitive_plane(h);
    CHECK(prim.k == FieldElem(4));
    CHECK(prim.l == FieldElem(0));
    CHECK(prim.m == FieldElem(1));
    CHECK(prim.n == FieldElem(1));
    // sign symmetry in y0
    EPoint q1m{kQ1.x0, -kQ1.y0, kQ1.z0};
    CHECK(same_plane(family_plane(q1m), h));
}

TEST_CASE("branch_sextic") {
    Surface s = Surface::base49();
    DualPlane h{FieldElem(4), FieldElem(0), FieldElem(1), FieldElem(1)};
    MPoly phi = branch_sextic(h, s);
    std::vector<std::string> xy{"x", "y"};
    CHECK(phi == MPoly::parse("-15*x^6 - 48*x^4*y^2 - 12*x^2*y^4 + 48*y^6", xy));

    DualPlane z0plane{FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(1)};
    CHECK(branch_sextic(z0plane, s) == MPoly::parse("49*x^6 + 49*y^6", xy));

    // scaling the plane by lambda scales phi by lambda^3
    FieldElem lam(make_rational(5, 3));
    DualPlane hs{h.k * lam, h.l * lam, h.m * lam, h.n * lam};
    CHECK(branch_sextic(hs, s) == phi * lam.pow(3));

    DualPlane vertex{FieldElem(1), FieldElem(0), FieldElem(0), FieldElem(0)};
    CHECK_THROWS(branch_sextic(vertex, s));
}

TEST_CASE("tangency_profile") {
    std::vector<std::string> xy{"x", "y"};
    MPoly phi = MPoly::parse("-15*x^6 - 48*x^4*y^2 - 12*x^2*y^4 + 48*y^6", xy);
    auto p1 = tangency_profile(phi);
    CHECK(p1.kind == Tangency::bitangent);
    CHECK(p1.multiplicities == std::vector<int>{2, 2, 1, 1});

    auto p2 = tangency_profile(MPoly::parse("x^6 + y^6", xy));
    CHECK(p2.kind == Tangency::transverse);
    CHECK(p2.multiplicities == std::vector<int>{1, 1, 1, 1, 1, 1});

    auto p3 = tangency_profile(MPoly::parse("(x^2 - y^2)^3", xy));
    CHECK(p3.kind == Tangency::higher_order);
    CHECK(p3.multiplicities == std::vector<int>{3, 3});

    // profile counts the root at infinity: y^2 (x^4 + y^4) has a double root there
    auto p4 = tangency_profile(MPoly::parse("y^2*x^4 + y^6", xy));
    CHECK(p4.multiplicities == std::vector<int>{2, 1, 1, 1, 1});
    CHECK(p4.kind == Tangency::simple_tangent);

    CHECK_THROWS(tangency_profile(MPoly(xy)));

    // invariance under scaling and coordinate swap
    MPoly swapped = MPoly::parse("-15*y^6 - 48*y^4*x^2 - 12*y^2*x^4 + 48*x^6", xy);
    CHECK(tangency_profile(swapped).kind == Tangency::bitangent);
    CHECK(tangency_profile(phi * FieldElem(make_rational(-7, 5))).kind == Tangency::bitangent);
}

TEST_CASE("family_curve") {
    auto c = family_curve(kQ1);
    CHECK_FALSE(c.degenerate);
    std::vector<std::string> xyzw{"x", "y", "z", "w"};
    CHECK(c.plane_eq == MPoly::parse("49*(4*x^2 + y^2 + z)", xyzw));
    CHECK(c.surface_eq == surface_poly(Surface::base49()));

    EPoint deg{FieldElem(1), FieldElem(-1), FieldElem(0)};
    auto cd = family_curve(deg);
    CHECK(cd.degenerate);
    CHECK(cd.plane_eq == MPoly::parse("49*x^2 + 49*y^2", xyzw));

    CHECK_THROWS(family_curve(EPoint{FieldElem(1), FieldElem(1), FieldElem(1)}));
}

TEST_CASE("adjunction identity, full expansion and specializations") {
    CHECK(adjunction_identity_check());

    std::vector<std::string> vars{"x0", "y0", "x", "y"};
    MPoly lhs = MPoly::parse("(x0^3 + y0^3)^2*(x^6 + y^6) - (x0^2*x^2 + y0^2*y^2)^3", vars);
    MPoly rhs = MPoly::parse(
        "(y0*x^2 - x0*y^2)^2*((2*x0^3*y0 + y0^4)*x^2 + (x0^4 + 2*x0*y0^3)*y^2)", vars);
    std::vector<FieldElem> s1{1, 1, 1, 0};
    CHECK(lhs.eval(s1) == FieldElem(3));
    CHECK(rhs.eval(s1) == FieldElem(3));
    std::vector<FieldElem> s2{1, 0, 1, 1};
    CHECK(lhs.eval(s2) == FieldElem(1));
    CHECK(rhs.eval(s2) == FieldElem(1));
}

TEST_CASE("section point at the generator") {
    WPoint p = section_point(kQ1);
    WPoint expect = surf_point(-Z(), 2, FieldElem(4) * Z(), 57);
    WPoint expect_neg = surf_point(-Z(), 2, FieldElem(4) * Z(), -57);
    CHECK((weighted_equal(p, expect) || weighted_equal(p, expect_neg)));
    CHECK(on_surface(p, Surface::base49()));
    auto c = family_curve(kQ1);
    CHECK(c.plane_eq.eval(p.coords).is_zero());
    // the closed form agrees up to sign
    FieldElem w = section_w_closed_form(kQ1);
    CHECK((p.coords[3] == w || p.coords[3] == -w));
    CHECK((w == FieldElem(57) || w == FieldElem(-57)));
}

TEST_CASE("section points across known parameters, including zeta twists") {
    std::vector<EPoint> qs{kQ1, kQ2, kQ3,
                           {kQ1.x0 * Z(), kQ1.y0 * Z(), kQ1.z0},
                           {kQ2.y0, kQ2.x0, kQ2.z0 * Z()}};
    for (auto const& q : qs) {
        REQUIRE(on_parametrizing_cubic(q));
        WPoint p = section_point(q);
        CHECK(on_surface(p, Surface::base49()));
        CHECK(family_curve(q).plane_eq.eval(p.coords).is_zero());
        CHECK(curve_point_smooth(q, p));
    }
}

TEST_CASE("curve_point_smooth rejects points off the curve") {
    CHECK_THROWS(curve_point_smooth(kQ1, surf_point(0, 1, 0, 7)));
}

TEST_CASE("multi-section points are singular: all Jacobian minors vanish identically") {
    // Parametrize the multi-section (x^2, y^2) = (x0, y0) by x = sx, y = sy
    // with x0 = sx^2, y0 = sy^2, z = z0, w = 0, and expand the 2x4 Jacobian
    // of (surface, plane) symbolically.
    std::vector<std::string> vars{"sx", "sy", "z0"};
    MPoly sx = MPoly::variable(vars, "sx"), sy = MPoly::variable(vars, "sy");
    MPoly z0 = MPoly::variable(vars, "z0");
    MPoly zero(vars);
    // row of surface gradient at (sx, sy, z0, 0): (-294 x^5, -294 y^5, -3 z^2, 2w)
    std::array<MPoly, 4> r1{sx.pow(5) * FieldElem(-294), sy.pow(5) * FieldElem(-294),
                            z0 * z0 * FieldElem(-3), zero};
    // row of plane gradient with x0 = sx^2, y0 = sy^2: (98 x0^2 x, 98 y0^2 y, z0^2, 0)
    std::array<MPoly, 4> r2{sx.pow(5) * FieldElem(98), sy.pow(5) * FieldElem(98), z0 * z0, zero};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            CHECK((r1[i] * r2[j] - r1[j] * r2[i]).is_zero());
}

TEST_CASE("the quadratic section factor divides the family sextic with multiplicity exactly 2") {
    std::vector<std::string> xonly{"x"};
    std::map<std::string, MPoly> dehom{{"x", MPoly::variable(xonly, "x")},
                                       {"y", MPoly::constant(xonly, FieldElem(1))}};
    for (auto const& q : family_parameters(10)) {
        MPoly phi = branch_sextic(family_plane(q), Surface::base49()).subst(dehom);
        UPoly u(phi.dense_univariate("x"));
        // (y0 x^2 - x0 y^2) dehomogenized at y = 1
        UPoly factor({-q.x0, FieldElem(0), q.y0});
        auto [q1, r1] = u.divmod(factor);
        REQUIRE(r1.is_zero());
        auto [q2, r2] = q1.divmod(factor);
        REQUIRE(r2.is_zero());
        auto [q3, r3] = q2.divmod(factor);
        CHECK_FALSE(r3.is_zero());
        (void)q3;
    }
}

TEST_CASE("fujita invariants") {
    CHECK(fujita_invariants(1) == std::pair<Rational, int>{Rational(2), 1});
    CHECK(fujita_invariants(2) == std::pair<Rational, int>{Rational(1), 1});
    CHECK(fujita_invariants(4) == std::pair<Rational, int>{make_rational(1, 2), 1});
    CHECK_THROWS(fujita_invariants(0));
}
