#include "mqrot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mqrot/errors.hpp"
#include "mqrot/heun.hpp"

namespace mqrot {

TridiagonalMatrix build_operator(int l_abs, double xi, const GridSpec& g) {
    if (l_abs < 0) throw InvalidParams("l_abs must be >= 0");
    if (g.n_points < 500) throw InvalidParams("grid needs at least 500 points");
    if (!(g.r_max > 0.0)) throw InvalidParams("r_max must be > 0");

    const int N = g.n_points;
    const double h = g.r_max / N;
    if (h > 0.02)
        throw GridTooCoarse("h = " + std::to_string(h) + " > 0.02");

    TridiagonalMatrix t;
    t.h = h;
    t.diag.resize(N);
    t.off.resize(N - 1);
    const double inv_h2 = 1.0 / (h * h);
    for (int j = 0; j < N; ++j) {
        const double r = (j + 0.5) * h;
        const double rm = j * h;        // inner face; zero flux at j = 0
        const double rp = (j + 1) * h;  // outer face; Dirichlet past r_max
        const double V = double(l_abs * l_abs) / (r * r) + r * r + xi / r;
        t.diag[j] = (rm + rp) * inv_h2 / r + V;
        if (j + 1 < N) {
            const double rn = (j + 1.5) * h;
            t.off[j] = -rp * inv_h2 / std::sqrt(r * rn);
        }
    }
    return t;
}

int sturm_count(const TridiagonalMatrix& t, double x) {
    int count = 0;
    double q = t.diag[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < t.size(); ++i) {
        const double e = t.off[i - 1];
        if (q == 0.0) q = std::numeric_limits<double>::min();
        q = t.diag[i] - x - e * e / q;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const TridiagonalMatrix& t, int k) {
    if (k < 1 || k > t.size()) throw InvalidParams("k out of range");

    // Gershgorin bounds.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < t.size(); ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(t.off[i - 1]);
        if (i + 1 < t.size()) radius += std::abs(t.off[i]);
        lo = std::min(lo, t.diag[i] - radius);
        hi = std::max(hi, t.diag[i] + radius);
    }

    std::vector<double> out(k);
    for (int idx = 0; idx < k; ++idx) {
        double a = lo, b = hi;
        const double scale = std::max({std::abs(a), std::abs(b), 1.0});
        int it = 0;
        for (; it < 200 && b - a > 1e-14 * scale; ++it) {
            const double mid = 0.5 * (a + b);
            if (sturm_count(t, mid) > idx) b = mid;
            else a = mid;
        }
        if (b - a > 1e-10 * scale)
            throw ConvergenceFailure("bisection stalled at eigenindex " +
                                     std::to_string(idx) + " after " +
                                     std::to_string(it) + " iterations");
        out[idx] = 0.5 * (a + b);
        lo = a;  // eigenvalues are requested in ascending order
    }
    return out;
}

std::vector<double> lowest_eigenvalues_extrapolated(int l_abs, double xi,
                                                    const GridSpec& g, int k) {
    GridSpec fine = g;
    fine.n_points = 2 * g.n_points;
    const auto coarse_ev = lowest_eigenvalues(build_operator(l_abs, xi, g), k);
    const auto fine_ev = lowest_eigenvalues(build_operator(l_abs, xi, fine), k);
    std::vector<double> out(k);
    for (int i = 0; i < k; ++i)
        out[i] = (4.0 * fine_ev[i] - coarse_ev[i]) / 3.0;
    return out;
}

VerificationReport verify_mode(const QuantizedMode& mode, const GridSpec& g,
                               double rel_tolerance) {
    const int L = std::abs(mode.l);
    const double Lambda = 2.0 * mode.n + 2.0 + 2.0 * L;

    GridSpec grid = g;
    grid.r_max = std::max(g.r_max, std::sqrt(Lambda) + 6.0);

    // Node count of the analytic polynomial state places it in the spectrum.
    const SeriesCoefficients state = coefficients(L, mode.xi_star, Lambda, mode.n);
    const RadialSamples samples = sample_radial(state, mode.n, grid.r_max, 4001);
    const int nodes = node_count(samples);

    const int k = nodes + 3;
    GridSpec fine = grid;
    fine.n_points = 2 * grid.n_points;
    const auto ev_coarse = lowest_eigenvalues(build_operator(L, mode.xi_star, grid), k);
    const auto ev_fine = lowest_eigenvalues(build_operator(L, mode.xi_star, fine), k);

    int idx = 0;
    for (int i = 1; i < k; ++i)
        if (std::abs(ev_fine[i] - Lambda) < std::abs(ev_fine[idx] - Lambda)) idx = i;

    const double tol = rel_tolerance * Lambda;
    if (std::abs(ev_fine[idx] - Lambda) > 10.0 * tol)
        throw NoMatchingEigenvalue("nearest eigenvalue " + std::to_string(ev_fine[idx]) +
                                   " is > 10x tolerance from " + std::to_string(Lambda));

    VerificationReport rep;
    rep.n = mode.n;
    rep.l = mode.l;
    rep.xi_star = mode.xi_star;
    rep.Lambda_analytic = Lambda;
    rep.Lambda_numeric = (4.0 * ev_fine[idx] - ev_coarse[idx]) / 3.0;
    rep.eigenindex = idx;
    rep.node_count = nodes;
    rep.abs_error = std::abs(rep.Lambda_numeric - Lambda);
    rep.richardson_error_estimate = std::abs(ev_fine[idx] - ev_coarse[idx]) / 3.0;
    rep.passed = rep.abs_error <= tol && idx == nodes;
    return rep;
}

}  // namespace mqrot
