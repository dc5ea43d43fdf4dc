#include "mqrot/heun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mqrot/errors.hpp"

namespace mqrot {

SeriesCoefficients coefficients(int l_abs, double xi, double Lambda, int K) {
    if (l_abs < 0) throw InvalidParams("l_abs must be >= 0");
    if (K < 1) throw InvalidParams("K must be >= 1");

    SeriesCoefficients s;
    s.l_abs = l_abs;
    s.xi = xi;
    s.Lambda = Lambda;
    s.coeffs.resize(K + 1);
    s.coeffs[0] = 1.0;
    s.coeffs[1] = xi / (1.0 + 2.0 * l_abs);
    for (int k = 0; k + 2 <= K; ++k) {
        const double denom = double(k + 2) * double(k + 2 + 2 * l_abs);
        s.coeffs[k + 2] =
            (xi * s.coeffs[k + 1] - (Lambda - 2.0 - 2.0 * l_abs - 2.0 * k) * s.coeffs[k]) /
            denom;
    }
    return s;
}

double termination_residual(int n, int l_abs, double xi) {
    if (n < 1) throw InvalidParams("n must be >= 1");
    const double Lambda = 2.0 * n + 2.0 + 2.0 * l_abs;
    return coefficients(l_abs, xi, Lambda, n + 1).coeffs[n + 1];
}

double eval_radial(const SeriesCoefficients& s, double r, int n_trunc) {
    if (r < 0.0) throw NegativeRadius("r must be >= 0");
    if (n_trunc > s.K()) throw InvalidParams("n_trunc exceeds computed coefficients");

    // Kahan-compensated Horner-free sum; the recurrence keeps K modest but
    // terms alternate in sign for attractive couplings.
    double sum = 0.0, comp = 0.0, rk = 1.0;
    for (int k = 0; k <= n_trunc; ++k) {
        const double term = s.coeffs[k] * rk - comp;
        const double t = sum + term;
        comp = (t - sum) - term;
        sum = t;
        rk *= r;
    }
    return std::exp(-0.5 * r * r) * std::pow(r, s.l_abs) * sum;
}

RadialSamples sample_radial(const SeriesCoefficients& s, int n_trunc,
                            double r_max, int n_samples) {
    if (n_samples < 2) throw InvalidParams("need at least 2 samples");
    RadialSamples out;
    out.l_abs = s.l_abs;
    out.grid.resize(n_samples);
    out.values.resize(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double r = r_max * double(i) / double(n_samples - 1);
        out.grid[i] = r;
        out.values[i] = eval_radial(s, r, n_trunc);
    }
    return out;
}

int node_count(const RadialSamples& samples) {
    double fmax = 0.0;
    for (double v : samples.values) fmax = std::max(fmax, std::abs(v));
    if (fmax == 0.0) return 0;
    const double dead = 1e-12 * fmax;

    int count = 0;
    int last_sign = 0;
    for (std::size_t i = 0; i < samples.grid.size(); ++i) {
        if (samples.grid[i] <= 0.0) continue;
        const double v = samples.values[i];
        if (std::abs(v) <= dead) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++count;
        last_sign = sign;
    }
    return count;
}

RadialSamples normalize(const RadialSamples& samples) {
    const std::size_t n = samples.grid.size();
    if (n < 2) throw InvalidParams("need at least 2 samples");

    double fmax = 0.0;
    for (double v : samples.values) fmax = std::max(fmax, std::abs(v));
    if (std::abs(samples.values.back()) >= 1e-8 * fmax)
        throw TailNotDecayed("F has not decayed at the end of the grid");

    double norm2 = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double fa = samples.values[i] * samples.values[i] * samples.grid[i];
        const double fb = samples.values[i + 1] * samples.values[i + 1] * samples.grid[i + 1];
        norm2 += 0.5 * (fa + fb) * (samples.grid[i + 1] - samples.grid[i]);
    }
    if (!(norm2 > 0.0)) throw InvalidParams("zero wavefunction cannot be normalized");

    RadialSamples out = samples;
    const double scale = 1.0 / std::sqrt(norm2);
    for (double& v : out.values) v *= scale;
    out.normalized = true;
    return out;
}

}  // namespace mqrot
