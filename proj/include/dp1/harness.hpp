#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dp1/elliptic.hpp"
#include "dp1/geometry.hpp"

namespace dp1 {

enum class PointSource { curve_enumeration, brute_force };

struct HeightEntry {
    WPoint point;  // normalized integral representative
    double height = 0.0;
    bool on_exceptional = false;
    PointSource source = PointSource::brute_force;
};

/// Naive anticanonical height max(|x|, |y|)^2 at the complex place; the
/// base point (0,0,1,1), where both sections vanish, is assigned height 1.
/// Requires Eisenstein-integral coordinates.
double height(WPoint const& p);

/// All points of the family curve of q with height <= T, exhaustively:
/// normalized integral representatives, z forced by the plane equation,
/// w by exact square root. Throws for degenerate parameters (z0 = 0).
std::vector<HeightEntry> enumerate_curve_points(EPoint const& q, double T);

/// Brute-force surface enumeration: normalized (x, y) with height <= T,
/// z over the documented box |z| <= (2 max(A,B) T^3)^(1/3) + 1, exact
/// square test for w. Requires integer A, B and T <= 4096.
std::vector<HeightEntry> enumerate_surface_points(Surface const& s, double T);

std::string point_key(WPoint const& p);

nlohmann::json entry_to_json(HeightEntry const& e);

/// A family curve together with its place in the unit-twist orbit of the
/// generator multiples (twist scales z0 by zeta^j, swap exchanges x0, y0).
struct FamilyCurveRef {
    int n = 1;
    int twist = 0;
    bool swapped = false;
    EPoint q;
    std::string label;
};

std::vector<FamilyCurveRef> family_orbit(int budget);

/// Counting report: surface totals, per-curve counts over the orbit of the
/// first `budget` parameters, growth ratios N(2T)/N(T), exceptional unions.
nlohmann::json count_report(std::vector<double> const& heights, int curve_budget);

struct Claim {
    std::string id;
    std::string paper;  // short statement of the verified claim
    std::string status; // pass / fail / flagged
    nlohmann::json details;
    double runtime_sec = 0.0;
};

/// Claim groups: "all", "picard", "identity", "section", "rank", "family".
std::vector<Claim> verify_claims(std::string const& group, std::uint64_t seed);
std::vector<Claim> verify_all(std::uint64_t seed);

nlohmann::json claims_to_json(std::vector<Claim> const& claims, std::uint64_t seed);

/// 0 when every non-flagged claim passes, 1 otherwise.
int claims_exit_code(std::vector<Claim> const& claims);

}  // namespace dp1
