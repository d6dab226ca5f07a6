#include "dp1/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dp1 {

namespace {

using cd = std::complex<double>;

// p(x) and p'(x) by Horner.
std::pair<cd, cd> eval_with_derivative(std::vector<cd> const& a, cd x) {
    cd p = a.back(), dp = 0.0;
    for (size_t i = a.size() - 1; i-- > 0;) {
        dp = dp * x + p;
        p = p * x + a[i];
    }
    return {p, dp};
}

// Backward-error scale: sum |a_i| |x|^i.
double residual_scale(std::vector<cd> const& a, cd x) {
    double ax = std::abs(x), t = 1.0, s = 0.0;
    for (auto const& ai : a) {
        s += std::abs(ai) * t;
        t *= ax;
    }
    return s;
}

}  // namespace

std::vector<cd> aberth_roots(std::vector<cd> coeffs) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    int d = static_cast<int>(coeffs.size()) - 1;
    if (d < 1) throw std::invalid_argument("aberth_roots: degree must be >= 1");
    if (d == 1) return {-coeffs[0] / coeffs[1]};

    // Cauchy bound for the initial circle
    double amax = 0.0;
    for (int i = 0; i < d; ++i) amax = std::max(amax, std::abs(coeffs[i] / coeffs[d]));
    double radius = 1.0 + amax;

    std::vector<cd> x(d);
    for (int j = 0; j < d; ++j) {
        double theta = 2.0 * M_PI * j / d + 0.4;
        x[j] = std::polar(radius * (0.5 + 0.5 * (j + 1.0) / d), theta);
    }

    std::vector<bool> frozen(d, false);
    constexpr int kMaxIter = 1000;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        bool all_done = true;
        for (int j = 0; j < d; ++j) {
            if (frozen[j]) continue;
            auto [p, dp] = eval_with_derivative(coeffs, x[j]);
            double scale = residual_scale(coeffs, x[j]);
            if (std::abs(p) <= 1e-15 * scale) {
                frozen[j] = true;
                continue;
            }
            cd newton = (std::abs(dp) > 0) ? p / dp : cd(1e-8, 1e-8);
            cd s = 0.0;
            for (int k = 0; k < d; ++k) {
                if (k == j) continue;
                cd diff = x[j] - x[k];
                if (std::abs(diff) < 1e-300) diff = cd(1e-12, 1e-12);
                s += 1.0 / diff;
            }
            cd denom = 1.0 - newton * s;
            cd delta = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            x[j] -= delta;
            if (std::abs(delta) > 1e-14 * (1.0 + std::abs(x[j]))) all_done = false;
        }
        if (all_done) return x;
    }
    throw std::runtime_error("aberth_roots: no convergence after iteration cap");
}

std::vector<RootCluster> cluster_roots(std::vector<cd> const& roots, double rel_gap) {
    if (roots.empty()) return {};
    double maxabs = 0.0;
    for (auto const& r : roots) maxabs = std::max(maxabs, std::abs(r));
    double gap = rel_gap * (1.0 + maxabs);

    size_t n = roots.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) < gap) parent[find(i)] = find(j);

    std::vector<RootCluster> out;
    std::vector<long> slot(n, -1);
    std::vector<std::vector<cd>> members;
    for (size_t i = 0; i < n; ++i) {
        size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(members.size());
            members.emplace_back();
        }
        members[static_cast<size_t>(slot[r])].push_back(roots[i]);
    }
    for (auto const& m : members) {
        cd center = std::accumulate(m.begin(), m.end(), cd(0.0)) / static_cast<double>(m.size());
        double radius = 0.0;
        for (auto const& r : m) radius = std::max(radius, std::abs(r - center));
        out.push_back({center, static_cast<int>(m.size()), radius});
    }
    std::sort(out.begin(), out.end(), [](RootCluster const& a, RootCluster const& b) {
        if (a.center.real() != b.center.real()) return a.center.real() < b.center.real();
        return a.center.imag() < b.center.imag();
    });
    return out;
}

std::vector<RootCluster> complex_roots(MPoly const& f, double tol) {
    (void)tol;  // convergence handled by the backward-error stop in aberth_roots
    auto vi = f.univariate_in();
    if (!vi) throw std::invalid_argument("complex_roots: polynomial is not univariate");
    auto dense = f.dense_univariate(f.vars()[*vi]);
    if (dense.size() < 2) throw std::invalid_argument("complex_roots: degree must be >= 1");

    // exact roots at the origin
    size_t low = 0;
    while (low < dense.size() && dense[low].is_zero()) ++low;
    std::vector<cd> roots(low, cd(0.0));

    if (dense.size() - low > 1) {
        std::vector<cd> coeffs;
        for (size_t i = low; i < dense.size(); ++i) coeffs.push_back(embed(dense[i]));
        std::vector<cd> rest;
        try {
            rest = aberth_roots(std::move(coeffs));
        } catch (std::runtime_error const&) {
            throw std::runtime_error("complex_roots: no convergence for " + f.str());
        }
        roots.insert(roots.end(), rest.begin(), rest.end());
    }
    return cluster_roots(roots, 1e-6);
}

}  // namespace dp1
