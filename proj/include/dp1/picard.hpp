#pragma once

#include <vector>

#include "dp1/rational.hpp"

namespace dp1 {

struct QMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<std::vector<Rational>> e;

    QMatrix() = default;
    QMatrix(size_t r, size_t c) : rows(r), cols(c), e(r, std::vector<Rational>(c, Rational(0))) {}

    static QMatrix identity(size_t n);
    static QMatrix from_rows(std::vector<std::vector<long>> const& rows);

    QMatrix transpose() const;
    bool operator==(QMatrix const& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

/// The two 9x9 Galois intersection matrices printed in the source (sigma
/// acting on 2^(1/3), rho acting on 7^(1/3)).
std::pair<QMatrix, QMatrix> galois_matrices();

QMatrix rref(QMatrix m);

size_t rank_of(QMatrix const& m);

struct QSubspace {
    std::vector<std::vector<Rational>> basis;  // rows of the rref of a spanning set

    size_t dimension() const { return basis.size(); }
    bool contains(std::vector<Rational> const& v) const;
};

/// Vectors v with v^T M = v^T for every M in ms, i.e. the intersection of
/// the kernels of (M^T - I). The printed generator is a left eigenvector of
/// the Gram-style matrices, hence the transpose convention.
QSubspace fixed_subspace(std::vector<QMatrix> const& ms);

struct PicardRankResult {
    int rank = 0;
    std::vector<Integer> generator;  // content 1, last coordinate negative
    bool is_anticanonical_direction = false;
};

PicardRankResult picard_rank_check();

}  // namespace dp1
