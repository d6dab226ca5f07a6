#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dp1/field.hpp"

namespace dp1 {

using Exponents = std::vector<unsigned>;

struct WeightVector {
    std::vector<unsigned> w;
};

/// Graded lexicographic order on exponent vectors of equal length.
struct GrlexLess {
    bool operator()(Exponents const& x, Exponents const& y) const;
};

/// Sparse multivariate polynomial over k = Q(zeta) with a fixed, per-instance
/// variable order. Binary operations require identical variable lists; mixing
/// orders throws rather than silently reordering exponents.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, FieldElem c);
    static MPoly variable(std::vector<std::string> const& vars, std::string const& name);

    std::vector<std::string> const& vars() const { return vars_; }
    std::map<Exponents, FieldElem, GrlexLess> const& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FieldElem constant_value() const;  // requires is_constant()

    void add_term(Exponents e, FieldElem c);

    MPoly operator-() const;
    MPoly operator+(MPoly const& o) const;
    MPoly operator-(MPoly const& o) const;
    MPoly operator*(MPoly const& o) const;
    MPoly operator*(FieldElem const& s) const;
    MPoly& operator+=(MPoly const& o) { *this = *this + o; return *this; }
    MPoly& operator-=(MPoly const& o) { *this = *this - o; return *this; }
    bool operator==(MPoly const& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(MPoly const& o) const { return !(*this == o); }

    MPoly pow(unsigned e) const;

    long total_degree() const;  // -1 for zero
    long degree_in(std::string const& var) const;

    /// Weighted degree if every term agrees, nullopt otherwise. f must be nonzero.
    std::optional<long> wdeg(WeightVector const& w) const;

    MPoly partial(std::string const& var) const;

    /// Exact composition; every variable occurring in *this must be assigned.
    /// All assigned polynomials must share one variable list, which becomes
    /// the result's.
    MPoly subst(std::map<std::string, MPoly> const& assignment) const;

    FieldElem eval(std::vector<FieldElem> const& point) const;

    /// Index of the single variable occurring, if univariate (constants count
    /// as univariate in no variable: returns nullopt for them).
    std::optional<size_t> univariate_in() const;

    std::vector<FieldElem> dense_univariate(std::string const& var) const;
    static MPoly from_dense(std::vector<std::string> vars, std::string const& var,
                            std::vector<FieldElem> const& coeffs);

    std::pair<Exponents, FieldElem> leading_term() const;  // grlex max; poly must be nonzero

    std::string str() const;
    static MPoly parse(std::string const& text, std::vector<std::string> vars);

private:
    size_t var_index(std::string const& name) const;
    void check_same_vars(MPoly const& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, FieldElem, GrlexLess> terms_;
};

inline MPoly operator*(FieldElem const& s, MPoly const& p) { return p * s; }

}  // namespace dp1
