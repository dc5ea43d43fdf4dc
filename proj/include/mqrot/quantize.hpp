#pragma once

#include <utility>
#include <vector>

#include "mqrot/model.hpp"

namespace mqrot {

// c_{n+1} as a polynomial in xi with Lambda = 2n + 2 + 2|l|; degree n+1,
// only powers with the parity of n+1 are nonzero.
struct ConstraintPolynomial {
    int n = 1;
    int l_abs = 0;
    std::vector<double> poly_coeffs;  // poly_coeffs[j] multiplies xi^j

    double eval(double xi) const;
    double eval_derivative(double xi) const;
    int degree() const { return static_cast<int>(poly_coeffs.size()) - 1; }
};

// One solved level: an allowed (frequency, energy) pair for quantum
// numbers (n, l) at a given root of the truncation constraint.
struct QuantizedMode {
    int n = 1;
    int l = 0;
    int root_index = 0;   // which positive xi root, ascending
    int branch = +1;      // sign of the frequency branch
    double xi_star = 0.0; // carries the sign of theta_pot
    double delta = 0.0;
    double omega = 0.0;
    double energy = 0.0;
    bool degenerate = false;  // theta = 0 collapse of the closed forms
};

ConstraintPolynomial constraint_polynomial(int n, int l_abs);

// All strictly positive real roots of the constraint polynomial, ascending,
// each isolated to ~1e-13 relative. Throws NoPositiveRoot if none exist.
std::vector<double> solve_xi(int n, int l_abs);

// Both frequency branches for a given constraint root, via
// delta = 4 m^2 theta^2 / xi*^2 and w± = -2 Omega ± 2 sqrt(Omega^2 + delta^2/m^2).
// Regular at Omega = 0.
std::pair<double, double> omega_from_root(const PhysicalParams& p, double xi_star);

// E = sqrt(w^2/4 + Omega w) (n + |l| + 1) - w l / 2 - Omega l.
double energy_general(int n, int l, double omega, double Omega);

// Closed forms for n = 1 and n = 2 (independent checks on the generic
// pipeline). Returned as (plus branch, minus branch).
std::pair<QuantizedMode, QuantizedMode> closed_form_n1(const PhysicalParams& p, int l);
std::pair<QuantizedMode, QuantizedMode> closed_form_n2(const PhysicalParams& p, int l);

// Full pipeline for one level: every positive constraint root, both branches,
// sorted by (root_index, branch descending omega first = '+' then '-').
std::vector<QuantizedMode> solve_level(const PhysicalParams& p, int n, int l);

// theta = 0 spectrum with unconstrained omega; n_r is the 0-based radial
// oscillator index: E = sqrt(w^2/4 + Omega w) (2 n_r + |l| + 1) - w l/2 - Omega l.
double landau_limit(const PhysicalParams& p, int n_r, int l, double omega);

}  // namespace mqrot
