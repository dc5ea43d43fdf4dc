#include "mqrot/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "mqrot/errors.hpp"
#include "mqrot/heun.hpp"

namespace mqrot {

double ConstraintPolynomial::eval(double xi) const {
    double acc = 0.0;
    for (auto it = poly_coeffs.rbegin(); it != poly_coeffs.rend(); ++it)
        acc = acc * xi + *it;
    return acc;
}

double ConstraintPolynomial::eval_derivative(double xi) const {
    double acc = 0.0;
    for (int j = degree(); j >= 1; --j)
        acc = acc * xi + j * poly_coeffs[j];
    return acc;
}

ConstraintPolynomial constraint_polynomial(int n, int l_abs) {
    if (n < 1) throw InvalidParams("n must be >= 1");
    if (l_abs < 0) throw InvalidParams("l_abs must be >= 0");

    const long double Lambda = 2.0L * n + 2.0L + 2.0L * l_abs;

    // Run the coefficient recurrence with each c_k kept as a polynomial in
    // xi; c_k has degree k.
    std::vector<std::vector<long double>> c(n + 2);
    c[0] = {1.0L};
    c[1] = {0.0L, 1.0L / (1.0L + 2.0L * l_abs)};
    for (int k = 0; k + 2 <= n + 1; ++k) {
        const long double denom = (long double)(k + 2) * (long double)(k + 2 + 2 * l_abs);
        const long double gamma = Lambda - 2.0L - 2.0L * l_abs - 2.0L * k;
        std::vector<long double> next(k + 3, 0.0L);
        for (int j = 0; j <= k + 1; ++j) next[j + 1] += c[k + 1][j];  // xi * c_{k+1}
        for (int j = 0; j <= k; ++j) next[j] -= gamma * c[k][j];
        for (auto& v : next) v /= denom;
        c[k + 2] = std::move(next);
    }

    ConstraintPolynomial P;
    P.n = n;
    P.l_abs = l_abs;
    P.poly_coeffs.assign(c[n + 1].begin(), c[n + 1].end());
    return P;
}

std::vector<double> solve_xi(int n, int l_abs) {
    const ConstraintPolynomial P = constraint_polynomial(n, l_abs);

    // Fujiwara bound on root magnitudes; the Cauchy bound is useless here
    // because the leading coefficient 1/prod((k+2)(k+2+2|l|)) is tiny.
    const double top = P.poly_coeffs.back();
    const int deg = P.degree();
    double fujiwara = 0.0;
    for (int j = 1; j <= deg; ++j) {
        const double a = P.poly_coeffs[deg - j];
        if (a != 0.0)
            fujiwara = std::max(fujiwara, std::pow(std::abs(a / top), 1.0 / j));
    }
    const double xi_max = std::max(2.0 * fujiwara, 1.0);

    // Sign-change scan, bisection, then Newton polish.
    const int n_scan = 4096;
    std::vector<double> roots;
    double x_prev = xi_max * 1e-12;  // skip the structural root at xi = 0
    double f_prev = P.eval(x_prev);
    for (int i = 1; i <= n_scan; ++i) {
        const double x = xi_max * double(i) / n_scan;
        const double f = P.eval(x);
        if (f_prev == 0.0) {
            roots.push_back(x_prev);
        } else if (f * f_prev < 0.0) {
            double lo = x_prev, hi = x, flo = f_prev;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = P.eval(mid);
                if (fm == 0.0) { lo = hi = mid; break; }
                if (fm * flo < 0.0) hi = mid;
                else { lo = mid; flo = fm; }
            }
            double r = 0.5 * (lo + hi);
            for (int it = 0; it < 4; ++it) {
                const double d = P.eval_derivative(r);
                if (d == 0.0) break;
                r -= P.eval(r) / d;
            }
            if (r > 0.0) roots.push_back(r);
        }
        x_prev = x;
        f_prev = f;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-10 * std::max(a, b); }),
                roots.end());

    if (roots.empty())
        throw NoPositiveRoot("no positive constraint root for n=" + std::to_string(n) +
                             ", |l|=" + std::to_string(l_abs));
    return roots;
}

namespace {

// w± = -2 Omega ± 2 sqrt(Omega^2 + delta^2/m^2), with the cancelling branch
// rationalized so small-delta frequencies keep full relative precision.
std::pair<double, double> omega_branches(double m, double Omega, double delta) {
    const double D = delta * delta / (m * m);
    const double s = std::sqrt(Omega * Omega + D);
    const double wp = Omega >= 0.0 ? 2.0 * D / (Omega + s) : -2.0 * Omega + 2.0 * s;
    const double wm = Omega <= 0.0 ? -2.0 * D / (s - Omega) : -2.0 * Omega - 2.0 * s;
    return {wp, wm};
}

}  // namespace

std::pair<double, double> omega_from_root(const PhysicalParams& p, double xi_star) {
    if (p.theta_pot == 0.0) throw ZeroTheta("theta = 0 has no truncation constraint");
    if (xi_star == 0.0) throw ZeroTheta("xi* = 0 is the theta = 0 degenerate case");
    const double delta = 4.0 * p.m * p.m * p.theta_pot * p.theta_pot / (xi_star * xi_star);
    return omega_branches(p.m, p.Omega, delta);
}

double energy_general(int n, int l, double omega, double Omega) {
    const double rad = omega * omega / 4.0 + Omega * omega;
    if (!(rad > 0.0)) throw NonPositiveRadicand("w^2/4 + Omega w <= 0");
    return std::sqrt(rad) * (n + std::abs(l) + 1) - 0.5 * omega * l - Omega * l;
}

namespace {

std::pair<QuantizedMode, QuantizedMode>
closed_form_impl(const PhysicalParams& p, int n, int l, double delta, double e_base,
                 double xi_star_abs) {
    const int L = std::abs(l);
    QuantizedMode plus, minus;
    plus.n = minus.n = n;
    plus.l = minus.l = l;
    plus.branch = +1;
    minus.branch = -1;

    if (p.theta_pot == 0.0) {
        // Constraint collapses: frequencies 0 and -4 Omega, energies -+ Omega l.
        plus.degenerate = minus.degenerate = true;
        plus.omega = 0.0;
        minus.omega = -4.0 * p.Omega;
        plus.energy = -p.Omega * l;
        minus.energy = +p.Omega * l;
        return {plus, minus};
    }

    const double sgn = p.theta_pot > 0.0 ? 1.0 : -1.0;
    const double s = std::sqrt(p.Omega * p.Omega + delta * delta / (p.m * p.m));
    plus.xi_star = minus.xi_star = sgn * xi_star_abs;
    plus.delta = minus.delta = delta;
    std::tie(plus.omega, minus.omega) = omega_branches(p.m, p.Omega, delta);
    // The -+ of the energy closed forms is locked to the ± of the frequency.
    plus.energy = e_base - l * s;
    minus.energy = e_base + l * s;
    (void)L;
    return {plus, minus};
}

}  // namespace

std::pair<QuantizedMode, QuantizedMode> closed_form_n1(const PhysicalParams& p, int l) {
    p.validate();
    const int L = std::abs(l);
    const double th2 = p.theta_pot * p.theta_pot;
    const double delta = 2.0 * p.m * p.m * th2 / (1.0 + 2.0 * L);
    const double e_base = 2.0 * p.m * th2 * (L + 2) / (1.0 + 2.0 * L);
    const double xi_abs = std::sqrt(2.0 * (1.0 + 2.0 * L));
    return closed_form_impl(p, 1, l, delta, e_base, xi_abs);
}

std::pair<QuantizedMode, QuantizedMode> closed_form_n2(const PhysicalParams& p, int l) {
    p.validate();
    const int L = std::abs(l);
    const double th2 = p.theta_pot * p.theta_pot;
    const double delta = p.m * p.m * th2 / (3.0 + 4.0 * L);
    const double e_base = p.m * th2 * (3.0 + L) / (3.0 + 4.0 * L);
    const double xi_abs = 2.0 * std::sqrt(3.0 + 4.0 * L);
    return closed_form_impl(p, 2, l, delta, e_base, xi_abs);
}

std::vector<QuantizedMode> solve_level(const PhysicalParams& p, int n, int l) {
    p.validate();
    if (n < 1) throw InvalidParams("n must be >= 1");
    if (p.theta_pot == 0.0)
        throw ZeroTheta("theta = 0: use landau_limit, the constraint is vacuous");

    const int L = std::abs(l);
    const double sgn = p.theta_pot > 0.0 ? 1.0 : -1.0;
    const std::vector<double> roots = solve_xi(n, L);

    std::vector<QuantizedMode> modes;
    modes.reserve(2 * roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double xi = roots[i];
        const double delta = 4.0 * p.m * p.m * p.theta_pot * p.theta_pot / (xi * xi);
        const auto [wp, wm] = omega_from_root(p, xi);
        for (int branch : {+1, -1}) {
            QuantizedMode mode;
            mode.n = n;
            mode.l = l;
            mode.root_index = static_cast<int>(i);
            mode.branch = branch;
            mode.xi_star = sgn * xi;
            mode.delta = delta;
            mode.omega = branch > 0 ? wp : wm;
            // sqrt(w^2/4 + Omega w) = delta/m by construction; assembling
            // through delta keeps full precision when delta << m Omega,
            // where the radicand cancels through the rounded omega.
            mode.energy = (delta / p.m) * (n + L + 1) - 0.5 * mode.omega * l -
                          p.Omega * l;
            modes.push_back(mode);
        }
    }
    return modes;
}

double landau_limit(const PhysicalParams& p, int n_r, int l, double omega) {
    p.validate();
    if (p.theta_pot != 0.0) throw ThetaNotZero("landau_limit requires theta = 0");
    if (n_r < 0) throw InvalidParams("n_r must be >= 0");
    const double rad = omega * omega / 4.0 + p.Omega * omega;
    if (!(rad > 0.0)) throw NonPositiveRadicand("w^2/4 + Omega w <= 0");
    return std::sqrt(rad) * (2 * n_r + std::abs(l) + 1) - 0.5 * omega * l - p.Omega * l;
}

}  // namespace mqrot
