#include "dp1/picard.hpp"

#include <stdexcept>

namespace dp1 {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.e[i][i] = 1;
    return m;
}

QMatrix QMatrix::from_rows(std::vector<std::vector<long>> const& rows) {
    if (rows.empty()) return {};
    QMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < m.rows; ++i) {
        if (rows[i].size() != m.cols) throw std::invalid_argument("QMatrix: ragged rows");
        for (size_t j = 0; j < m.cols; ++j) m.e[i][j] = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols, rows);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) t.e[j][i] = e[i][j];
    return t;
}

std::pair<QMatrix, QMatrix> galois_matrices() {
    QMatrix sigma = QMatrix::from_rows({
        {1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, -1, -1, 0, -1, -1, -1, 2},
        {0, 0, 0, -1, -1, -1, -1, -1, 2},
        {0, 0, -1, 0, -1, -1, -1, -1, 2},
        {0, 0, 0, 0, 0, 0, -1, -1, 1},
        {0, 0, 0, 0, 0, -1, 0, -1, 1},
        {0, 0, 0, 0, 0, -1, -1, 0, 1},
        {0, 0, -1, -1, -1, -2, -2, -2, 4},
    });
    QMatrix rho = QMatrix::from_rows({
        {-2, -3, -2, -2, -2, -2, -2, -2, 6},
        {0, -2, -1, -1, -1, -1, -1, -1, 3},
        {-1, -2, -2, -2, -1, -2, -2, -2, 5},
        {-1, -2, -1, -1, 0, -1, -1, -1, 3},
        {-1, -2, -2, -2, -1, -1, -1, -1, 4},
        {-1, -2, -1, -2, -1, -2, -1, -1, 4},
        {-1, -2, -1, -2, -1, -1, -2, -1, 4},
        {-1, -2, -1, -2, -1, -1, -1, -2, 4},
        {-3, -6, -4, -5, -3, -4, -4, -4, 12},
    });
    return {sigma, rho};
}

QMatrix rref(QMatrix m) {
    size_t lead = 0;
    for (size_t r = 0; r < m.rows && lead < m.cols; ++r) {
        size_t pivot = r;
        while (pivot < m.rows && m.e[pivot][lead] == 0) ++pivot;
        if (pivot == m.rows) {
            ++lead;
            --r;
            continue;
        }
        std::swap(m.e[pivot], m.e[r]);
        Rational inv = Rational(1) / m.e[r][lead];
        for (size_t j = lead; j < m.cols; ++j) m.e[r][j] *= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.e[i][lead] == 0) continue;
            Rational f = m.e[i][lead];
            for (size_t j = lead; j < m.cols; ++j) m.e[i][j] -= f * m.e[r][j];
        }
        ++lead;
    }
    return m;
}

size_t rank_of(QMatrix const& m) {
    QMatrix r = rref(m);
    size_t rank = 0;
    for (size_t i = 0; i < r.rows; ++i)
        for (size_t j = 0; j < r.cols; ++j)
            if (r.e[i][j] != 0) {
                ++rank;
                break;
            }
    return rank;
}

bool QSubspace::contains(std::vector<Rational> const& v) const {
    if (basis.empty()) return false;
    QMatrix with(basis.size() + 1, basis[0].size());
    for (size_t i = 0; i < basis.size(); ++i) with.e[i] = basis[i];
    with.e[basis.size()] = v;
    return rank_of(with) == basis.size();
}

QSubspace fixed_subspace(std::vector<QMatrix> const& ms) {
    if (ms.empty()) throw std::invalid_argument("fixed_subspace: empty matrix list");
    size_t n = ms[0].rows;
    for (auto const& m : ms)
        if (m.rows != n || m.cols != n)
            throw std::invalid_argument("fixed_subspace: matrices must be square of equal size");

    // stack (M^T - I) and compute the kernel
    QMatrix stacked(ms.size() * n, n);
    for (size_t k = 0; k < ms.size(); ++k) {
        QMatrix t = ms[k].transpose();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                stacked.e[k * n + i][j] = t.e[i][j] - (i == j ? 1 : 0);
    }
    QMatrix r = rref(stacked);

    std::vector<long> pivot_of_col(n, -1);
    for (size_t i = 0; i < r.rows; ++i)
        for (size_t j = 0; j < n; ++j)
            if (r.e[i][j] != 0) {
                pivot_of_col[j] = static_cast<long>(i);
                break;
            }

    QSubspace out;
    for (size_t j = 0; j < n; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        std::vector<Rational> v(n, Rational(0));
        v[j] = 1;
        for (size_t jj = 0; jj < n; ++jj)
            if (pivot_of_col[jj] >= 0)
                v[jj] = -r.e[static_cast<size_t>(pivot_of_col[jj])][j];
        out.basis.push_back(std::move(v));
    }
    // canonicalize: rref of the basis rows
    if (!out.basis.empty()) {
        QMatrix b(out.basis.size(), n);
        b.e = out.basis;
        QMatrix rb = rref(b);
        out.basis.clear();
        for (auto& rowv : rb.e) {
            bool zero = true;
            for (auto const& x : rowv)
                if (x != 0) zero = false;
            if (!zero) out.basis.push_back(rowv);
        }
    }
    return out;
}

PicardRankResult picard_rank_check() {
    auto [sigma, rho] = galois_matrices();
    QSubspace fixed = fixed_subspace({sigma, rho});
    PicardRankResult out;
    out.rank = static_cast<int>(fixed.dimension());
    if (fixed.dimension() == 1) {
        auto const& v = fixed.basis[0];
        Integer den = 1;
        for (auto const& x : v) den = lcm(den, x.get_den());
        std::vector<Integer> g;
        Integer content = 0;
        for (auto const& x : v) {
            Integer num = Rational(x * Rational(den)).get_num();
            g.push_back(num);
            content = gcd(content, num);
        }
        for (auto& x : g) x /= content;
        if (g.back() > 0)
            for (auto& x : g) x = -x;
        out.generator = g;
        std::vector<Integer> anticanonical{1, 1, 1, 1, 1, 1, 1, 1, -3};
        out.is_anticanonical_direction = (g == anticanonical);
    }
    return out;
}

}  // namespace dp1
