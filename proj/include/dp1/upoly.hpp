#pragma once

#include <optional>
#include <vector>

#include "dp1/mpoly.hpp"

namespace dp1 {

/// Dense univariate polynomial over k; c[i] is the coefficient of x^i.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<FieldElem> coeffs) : c(std::move(coeffs)) { trim(); }

    std::vector<FieldElem> c;

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    FieldElem lead() const;

    UPoly operator+(UPoly const& o) const;
    UPoly operator-(UPoly const& o) const;
    UPoly operator*(UPoly const& o) const;
    UPoly operator*(FieldElem const& s) const;
    bool operator==(UPoly const& o) const { return c == o.c; }

    UPoly monic() const;
    UPoly derivative() const;
    FieldElem eval(FieldElem const& x) const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UPoly, UPoly> divmod(UPoly const& d) const;
    /// Exact quotient; throws if the division leaves a remainder.
    UPoly exact_div(UPoly const& d) const;
};

/// Monic gcd. gcd(f, 0) is monic f; gcd(0, 0) throws.
UPoly ugcd(UPoly a, UPoly b);

struct SquarefreeFactor {
    UPoly factor;  // monic, squarefree, nonconstant
    int multiplicity;
};

struct SquarefreeDecomposition {
    FieldElem lead;
    std::vector<SquarefreeFactor> factors;  // ascending multiplicity
};

/// Yun's algorithm (characteristic 0): f = lead * prod factor^multiplicity.
SquarefreeDecomposition squarefree_decompose(UPoly const& f);

/// g with g*g == f over k, when it exists (term-recursion extraction).
std::optional<MPoly> is_perfect_square(MPoly const& f);

// MPoly-level wrappers for univariate inputs sharing one variable.
MPoly ugcd(MPoly const& f, MPoly const& g);
std::vector<std::pair<MPoly, int>> squarefree_decompose_mpoly(MPoly const& f);

}  // namespace dp1
