#pragma once

#include <cmath>
#include <string>

#include "mqrot/errors.hpp"

namespace mqrot {

// Laboratory knobs of the rotating quadrupole system, natural units
// (hbar = c = 1). All spectra downstream are functions of these five
// numbers plus the quantum numbers (n, l).
struct PhysicalParams {
    double m = 1.0;          // particle mass, > 0
    double M_quad = 1.0;     // magnetic quadrupole scalar M, > 0
    double lambda = 0.0;     // charge-density parameter of the radial E field
    double Omega = 0.0;      // frame rotation rate about z
    double theta_pot = 0.0;  // strength of the 1/rho scalar potential

    void validate() const {
        if (!(m > 0.0) || !std::isfinite(m))
            throw InvalidParams("mass must be finite and > 0");
        if (!(M_quad > 0.0) || !std::isfinite(M_quad))
            throw InvalidParams("quadrupole moment must be finite and > 0");
        if (!std::isfinite(lambda) || !std::isfinite(Omega) || !std::isfinite(theta_pot))
            throw InvalidParams("lambda, Omega, theta must be finite");
    }
};

// Scalar scales of the radial problem at a given cyclotron frequency.
struct DerivedScales {
    double omega;   // cyclotron frequency
    double delta;   // confinement scale, > 0
    double Lambda;  // dimensionless eigenvalue Theta/delta
    double xi;      // dimensionless Coulomb coupling 2 m theta / sqrt(delta)
};

inline double cyclotron_frequency(const PhysicalParams& p) {
    return 2.0 * p.M_quad * p.lambda / p.m;
}

// z-component of B_eff = lambda M z
inline double effective_field(const PhysicalParams& p) {
    return p.lambda * p.M_quad;
}

inline double delta_from_omega(const PhysicalParams& p, double omega) {
    const double rad = p.m * p.m * (omega * omega / 4.0 + p.Omega * omega);
    if (!(rad > 0.0))
        throw NonPositiveRadicand("m^2 w^2/4 + m^2 Omega w <= 0 at omega = " +
                                  std::to_string(omega));
    return std::sqrt(rad);
}

inline double theta_capital(const PhysicalParams& p, double E, int l, double omega) {
    return 2.0 * p.m * E + 2.0 * p.m * p.Omega * l + p.m * omega * l;
}

inline double xi_coupling(const PhysicalParams& p, double delta) {
    if (!(delta > 0.0))
        throw NonPositiveDelta("delta must be > 0, got " + std::to_string(delta));
    return 2.0 * p.m * p.theta_pot / std::sqrt(delta);
}

inline DerivedScales derived_scales(const PhysicalParams& p, double E, int l, double omega) {
    const double delta = delta_from_omega(p, omega);
    return DerivedScales{omega, delta, theta_capital(p, E, l, omega) / delta,
                         xi_coupling(p, delta)};
}

}  // namespace mqrot
