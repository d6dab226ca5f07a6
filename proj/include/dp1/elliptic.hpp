#pragma once

#include <optional>
#include <vector>

#include "dp1/geometry.hpp"
#include "dp1/rational.hpp"

namespace dp1 {

/// Y^2 = X^3 + a X + b over Q.
struct WeierstrassCurve {
    Rational a;
    Rational b;

    /// Weierstrass model of x^3 + y^3 = m z^3: Y^2 = X^3 - 432 m^2.
    static WeierstrassCurve mordell(long m);

    Rational discriminant() const;  // -16 (4a^3 + 27b^2)
};

struct ECPoint {
    bool at_infinity = true;
    Rational X;
    Rational Y;

    static ECPoint infinity() { return {}; }
    static ECPoint affine(Rational X, Rational Y) { return {false, std::move(X), std::move(Y)}; }

    bool operator==(ECPoint const& o) const {
        if (at_infinity || o.at_infinity) return at_infinity == o.at_infinity;
        return X == o.X && Y == o.Y;
    }
};

bool on_curve(ECPoint const& p, WeierstrassCurve const& c);

ECPoint ec_neg(ECPoint const& p);
ECPoint ec_add(ECPoint const& p, ECPoint const& q, WeierstrassCurve const& c);
ECPoint ec_multiply(long n, ECPoint const& p, WeierstrassCurve const& c);

/// Projective rational point on x^3 + y^3 = m z^3.
struct FermatPoint {
    Rational x, y, z;

    bool operator==(FermatPoint const& o) const { return x == o.x && y == o.y && z == o.z; }
};

bool on_fermat_cubic(long m, FermatPoint const& p);

/// x + y = 0 maps to infinity; otherwise X = 12 m z / (x + y),
/// Y = 36 m (y - x) / (x + y).
ECPoint fermat_to_weierstrass(long m, FermatPoint const& p);

/// Inverse substitution with z = 1, cleared to a primitive integer triple
/// (z > 0 normalization); infinity maps to (1, -1, 0).
FermatPoint weierstrass_to_fermat(long m, ECPoint const& p);

/// Change of variables between z0^3 + 49 x0^3 + 49 y0^3 = 0 and
/// x^3 + y^3 = 7 z^3: (x0, y0, z0) <-> (x0, y0, -z0/7).
FermatPoint e_to_fermat(EPoint const& q);
EPoint fermat_to_e(FermatPoint const& p);

/// nP = O for some n in {1..10, 12} (Mazur's bound on rational torsion).
bool is_torsion(ECPoint const& p, WeierstrassCurve const& c);

/// The multiples nP for n in {1..10, 12}, as evidence for torsion checks.
std::vector<std::pair<int, ECPoint>> torsion_trace(ECPoint const& p, WeierstrassCurve const& c);

struct RankCertificate {
    long m = 0;
    FermatPoint fermat_gen;
    ECPoint weierstrass_gen;
    std::vector<std::pair<int, ECPoint>> trace;  // none at infinity
};

/// Searches primitive integer Fermat points with coordinates bounded by
/// search_bound and returns the first non-torsion one found. Absence only
/// means no point was found within the bound.
std::optional<RankCertificate> rank_ge_one_certificate(long m, long search_bound);

/// The E-points of nP0 for n = 1..count, P0 the m = 7 certificate generator.
std::vector<EPoint> family_parameters(int count);

}  // namespace dp1
