#pragma once

#include <vector>

#include "mqrot/quantize.hpp"

namespace mqrot {

struct GridSpec {
    double r_max = 10.0;
    int n_points = 4000;
};

// Symmetric tridiagonal discretization of the scaled radial operator.
struct TridiagonalMatrix {
    std::vector<double> diag;
    std::vector<double> off;  // size diag.size() - 1
    double h = 0.0;

    int size() const { return static_cast<int>(diag.size()); }
};

struct VerificationReport {
    int n = 0;
    int l = 0;
    double xi_star = 0.0;
    double Lambda_analytic = 0.0;
    double Lambda_numeric = 0.0;
    int eigenindex = -1;
    int node_count = -1;
    double abs_error = 0.0;
    double richardson_error_estimate = 0.0;
    bool passed = false;
};

// Finite-volume discretization of
//   -F'' - F'/r + (l^2/r^2 + r^2 + xi/r) F = Lambda F
// on cell centers r_j = (j + 1/2) h, symmetrized by G = sqrt(r) F. The
// zero-flux face at r = 0 makes the origin regular for every |l| >= 0;
// Dirichlet at r_max.
TridiagonalMatrix build_operator(int l_abs, double xi, const GridSpec& g);

// Number of eigenvalues strictly below x (Sturm count via LDL^T pivots).
int sturm_count(const TridiagonalMatrix& t, double x);

// k smallest eigenvalues, ascending, by bisection on Sturm counts.
std::vector<double> lowest_eigenvalues(const TridiagonalMatrix& t, int k);

// Richardson-extrapolated k lowest eigenvalues over grids (N, 2N),
// assuming O(h^2) convergence.
std::vector<double> lowest_eigenvalues_extrapolated(int l_abs, double xi,
                                                    const GridSpec& g, int k);

// Checks one quantized mode against the numerical spectrum: the analytic
// Lambda = 2n + 2 + 2|l| must appear within tolerance at the eigenindex
// predicted by the polynomial state's node count.
VerificationReport verify_mode(const QuantizedMode& mode, const GridSpec& g,
                               double rel_tolerance = 1e-4);

}  // namespace mqrot
