#pragma once

#include <vector>

namespace mqrot {

// Power-series coefficients c_0..c_K of the biconfluent Heun solution h(r),
// in the dimensionless pair (xi, Lambda). c_0 = 1 by construction.
struct SeriesCoefficients {
    int l_abs = 0;
    double xi = 0.0;
    double Lambda = 0.0;
    std::vector<double> coeffs;  // coeffs[k] = c_k, size K+1

    int K() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Radial wavefunction F(r) = exp(-r^2/2) r^|l| h(r) sampled on a grid.
struct RadialSamples {
    std::vector<double> grid;    // strictly increasing, >= 0
    std::vector<double> values;  // F at grid points
    int l_abs = 0;
    bool normalized = false;
};

// Runs the three-term recurrence
//   c_{k+2} = [xi c_{k+1} - (Lambda - 2 - 2|l| - 2k) c_k] / ((k+2)(k+2+2|l|))
// with c_0 = 1, c_1 = xi / (1 + 2|l|).
SeriesCoefficients coefficients(int l_abs, double xi, double Lambda, int K);

// c_{n+1}(xi) with Lambda pinned to 2n + 2 + 2|l|. Zero iff xi satisfies the
// second truncation condition, i.e. the series terminates at degree n.
double termination_residual(int n, int l_abs, double xi);

// F(r) with the series truncated at degree n_trunc.
double eval_radial(const SeriesCoefficients& s, double r, int n_trunc);

// Uniform sampling of F on [0, r_max].
RadialSamples sample_radial(const SeriesCoefficients& s, int n_trunc,
                            double r_max, int n_samples);

// Strict sign changes of F on r > 0, with a dead-band of 1e-12 * max|F|
// so round-off wiggles are not counted. The origin zero from r^|l| is
// excluded.
int node_count(const RadialSamples& samples);

// Scales so that the trapezoidal integral of |F|^2 r dr equals 1.
// Requires the tail to have decayed: |F(r_max)| < 1e-8 * max|F|.
RadialSamples normalize(const RadialSamples& samples);

}  // namespace mqrot
