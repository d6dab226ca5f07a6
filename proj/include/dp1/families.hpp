#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dp1/geometry.hpp"
#include "dp1/mpoly.hpp"
#include "dp1/roots.hpp"

namespace dp1 {

/// A projective involution of P^3 acting on (X, Y, Z, W), preserving the
/// branch curve B = V(U) cap V(V).
struct Involution {
    std::string name;
    std::array<std::array<FieldElem, 4>, 4> M;
};

/// iota_3 .. iota_6 from the classification of constant-direction involutions.
Involution involution(int i);

std::array<FieldElem, 4> apply(Involution const& io, std::array<FieldElem, 4> const& p);

/// Checks M^2 = identity and U, V invariance (up to scalar) for the surface's
/// branch curve in P^3, symbolically.
bool is_branch_involution(Involution const& io, Surface const& s);

/// The common direction of iota(P) - P when the matrix iota - id has rank 1;
/// normalized so its first nonzero entry is 1.
std::optional<std::array<FieldElem, 4>> fixed_direction(Involution const& io);

/// An irreducible component of the dual-variety singular locus: a linear
/// form and a sextic in the dual coordinates (k, l, m, n).
struct DualComponent {
    std::string name;
    MPoly linear;
    MPoly sextic;
};

/// S_3 .. S_6 for the unit surface w^2 = z^3 + x^6 + y^6.
DualComponent component_s(int i);

/// A complex point of the dual space, for numeric work.
struct CPlane {
    std::complex<double> k, l, m, n;
};

CPlane embed_plane(DualPlane const& h);

bool component_membership(DualPlane const& h, DualComponent const& s);
bool component_membership(CPlane const& h, DualComponent const& s, double tol = 1e-8);

/// Transport of a unit-surface component to w^2 = z^3 + A(x^6 + y^6):
/// substitute (k, l, m) -> alpha (k, l, m) with alpha^3 = 1/A and clear to
/// a primitive form.
DualComponent scale_component(DualComponent const& s, Rational const& A);

/// Seeded complex samples: the linear equation fixes one coordinate, n = 1,
/// one coordinate is drawn rationally, and the sextic is solved numerically
/// for the last. Every sample has relative residual below 1e-10.
std::vector<CPlane> sample_component_points(DualComponent const& s, int count, std::uint64_t seed);

/// Restriction-sextic root profile of a complex plane via Aberth iteration
/// and clustering at relative gap tol.
TangencyProfile verify_bitangency_numeric(CPlane const& h, Surface const& s, double tol = 1e-6);

/// The unique plane containing the tangent line of B at P and the direction
/// d: (grad V . d) grad U - (grad U . d) grad V. Throws when d is tangent.
DualPlane plane_through_tangent_and_direction(std::array<FieldElem, 4> const& p,
                                              std::array<FieldElem, 4> const& d, Surface const& s);
CPlane plane_through_tangent_and_direction(std::array<std::complex<double>, 4> const& p,
                                           std::array<std::complex<double>, 4> const& d,
                                           Surface const& s);

}  // namespace dp1
