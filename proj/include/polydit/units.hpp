#pragma once

#include "polydit/types.hpp"

namespace polydit {

// Maps physical (x, p, E, t) to dimensionless (mu, rho, epsilon, tau):
//   mu = x/lambda, rho = p*lambda/hbar, eps = m*lambda^2*E/hbar^2, tau = hbar*t/(m*lambda^2).
struct UnitMap {
    double lambda;  // lattice spacing [m]
    double mass;    // [kg]
    double hbar;    // [J s]

    UnitMap(double lambda_, double mass_, double hbar_);
};

struct Dimensionless {
    double mu, rho, epsilon, tau;
};

struct Physical {
    double x, p, E, t;
};

Dimensionless to_dimensionless(const Physical& q, const UnitMap& u);
Physical to_physical(const Dimensionless& q, const UnitMap& u);

// Momentum reduced to the half Brillouin zone [0, pi). Construction from a
// physical p < 0 is rejected (the beam travels to the right).
struct LatticeMomentum {
    double rho;

    explicit LatticeMomentum(double rho_);
    static LatticeMomentum from_physical(double p, const UnitMap& u);

    // dispersion of the polymer Schroedinger chain
    double epsilon() const;
};

// Heaviside with Theta(0) = 1; the tau->0 limit of the lattice propagator sum
// occupies site mu = 0, which fixes the convention.
double heaviside(double y);

// e^{i rho mu} Theta(-mu)
cplx initial_wavefunction(int mu, const LatticeMomentum& rho);

}  // namespace polydit
