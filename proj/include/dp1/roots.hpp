#pragma once

#include <complex>
#include <vector>

#include "dp1/mpoly.hpp"

namespace dp1 {

struct RootCluster {
    std::complex<double> center;
    int multiplicity = 1;
    double radius = 0.0;
};

/// All complex roots of sum coeffs[i] x^i by simultaneous Aberth-Ehrlich
/// iteration. coeffs.back() must be nonzero and degree >= 1. Throws
/// std::runtime_error when the iteration cap is hit.
std::vector<std::complex<double>> aberth_roots(std::vector<std::complex<double>> coeffs);

/// Agglomerates roots whose pairwise distance is below
/// rel_gap * (1 + max |root|); multiplicity is the cluster size.
std::vector<RootCluster> cluster_roots(std::vector<std::complex<double>> const& roots,
                                       double rel_gap = 1e-6);

/// Roots of a univariate polynomial over k, clustered by multiplicity.
/// tol is the iteration convergence target; clustering uses the fixed
/// relative gap 1e-6.
std::vector<RootCluster> complex_roots(MPoly const& f, double tol = 1e-12);

}  // namespace dp1
