#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dp1/field.hpp"
#include "dp1/mpoly.hpp"

namespace dp1 {

/// A point of a weighted projective space over k, stored as one
/// representative. Equality is equality of the underlying points.
struct WPoint {
    std::vector<FieldElem> coords;
    std::vector<unsigned> weights;

    WPoint() = default;
    WPoint(std::vector<FieldElem> c, std::vector<unsigned> w);

    /// Representative with the first nonzero coordinate of weight 1 scaled
    /// to 1 (identity when no weight-1 coordinate is nonzero).
    WPoint normalized_field() const;
};

bool weighted_equal(WPoint const& p, WPoint const& q);

/// w^2 = z^3 + A x^6 + B y^6 in P(1,1,2,3).
struct Surface {
    FieldElem A;
    FieldElem B;

    static Surface base49() { return {FieldElem(49), FieldElem(49)}; }
    static Surface unit() { return {FieldElem(1), FieldElem(1)}; }
};

/// The defining polynomial w^2 - z^3 - A x^6 - B y^6 in variables (x,y,z,w).
MPoly surface_poly(Surface const& s);

/// The plane k X + l Y + m Z + n W in the dual P^3; equality up to scalar.
struct DualPlane {
    FieldElem k, l, m, n;
};

bool same_plane(DualPlane const& a, DualPlane const& b);

/// For planes with rational entries: clear denominators, divide by the
/// integer content, fix the sign of the first nonzero entry positive.
DualPlane primitive_plane(DualPlane const& h);

/// A point of the parametrizing Fermat-type cubic z0^3 + 49 x0^3 + 49 y0^3 = 0.
struct EPoint {
    FieldElem x0, y0, z0;
};

bool on_parametrizing_cubic(EPoint const& q);

enum class Tangency { transverse, simple_tangent, bitangent, tritangent, higher_order, degenerate };

struct TangencyProfile {
    std::vector<int> multiplicities;  // sorted descending, summing to 6
    Tangency kind = Tangency::degenerate;
};

std::string to_string(Tangency t);

/// Classification from a multiplicity multiset (used by both the exact and
/// the numeric profile paths).
Tangency classify_multiplicities(std::vector<int> const& mults);

// ---- operations ----

bool on_surface(WPoint const& p, Surface const& s);

/// P(1,1,2) -> P^3, (x,y,z) -> (x^2, xy, y^2, z); image lies on Y^2 = XZ.
std::array<FieldElem, 4> cone_chart(WPoint const& p);

/// Tangent plane of the cubic A X^3 + B Z^3 + W^3 at the image of a branch
/// curve point P0 = (x0, y0, z0); bitangent to B at P0 and its Y-involution
/// image. Throws if P0 is not on the branch curve.
DualPlane bitangent_plane(WPoint const& p0, Surface const& s);

/// The plane of the family member attached to an E-point (x0' = x0^2 form).
DualPlane family_plane(EPoint const& q);

/// Restriction sextic phi(x, y) = n^3 (A x^6 + B y^6) - (k x^2 + l xy + m y^2)^3.
/// Throws for planes through the cone vertex (n = 0).
MPoly branch_sextic(DualPlane const& h, Surface const& s);

/// Exact root-multiplicity profile of a binary sextic over the algebraic
/// closure (squarefree decomposition; the root at infinity is the degree
/// deficit of phi(x, 1)).
TangencyProfile tangency_profile(MPoly const& phi);

struct FamilyCurve {
    MPoly surface_eq;  // in (x,y,z,w)
    MPoly plane_eq;    // z0^2 z + 49 x0^2 x^2 + 49 y0^2 y^2
    bool degenerate = false;  // z0 = 0: plane through the cone vertex
};

FamilyCurve family_curve(EPoint const& q);

/// Expands both sides of the four-variable identity behind the section
/// construction and compares them exactly.
bool adjunction_identity_check();

/// The section point ((zeta y0, x0, 49 zeta x0^2 y0^2 / z0^2, w) with w the
/// exact square root of the surface right-hand side. Throws on degenerate
/// fibers (x0^3 + y0^3 = 0, z0 = 0 or x0 y0 = 0).
WPoint section_point(EPoint const& q);

/// Derived closed form for w, cross-checked against the exact square root:
/// 7 (x0^3 - zeta^2 y0^3)(x0^3 - zeta y0^3) / (x0^3 + y0^3).
FieldElem section_w_closed_form(EPoint const& q);

/// True iff the 2x4 Jacobian of the two defining equations of the family
/// curve has rank 2 at P. Throws when P is not on the curve.
bool curve_point_smooth(EPoint const& q, WPoint const& p);

/// (a, b) = (2/d, 1) for a rational curve of anticanonical degree d >= 1.
std::pair<Rational, int> fujita_invariants(long d);

}  // namespace dp1
