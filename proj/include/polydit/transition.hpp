#pragma once

#include "polydit/types.hpp"
#include "polydit/units.hpp"

namespace polydit {

struct TransitionReport {
    cplx main_term;    // continuum Moshinsky function on the lattice point
    cplx correction;   // (1/sqrt(8 pi tau)) e^{-i(pi/4 + mu^2/(2 tau))}
    cplx exact;        // lattice wave function psi_mu(tau)
    double residual_P; // |exact|^2 - |main_term|^2
};

// Stationary-phase approximation to J_nu(tau) e^{-i tau + i pi nu/2}:
//   (e^{-i pi/4}/sqrt(2 pi tau)) { e^{i nu^2/(2 tau)} + i (-1)^nu e^{-i nu^2/(2 tau) - 2 i tau} }
cplx asymptotic_bessel(int nu, double tau);

// Discrete Moshinsky function
//   e^{i(rho mu - rho^2 tau/2)} (e^{-i pi/4}/sqrt(2 pi tau)) sum_{nu <= floor(rho tau - mu)} e^{i nu^2/(2 tau)}
// regularized with e^{-eta nu^2} (default eta = 1e-6/tau) plus a fixed Hann
// taper over |nu| in [4 tau, 5 tau] that suppresses the Gauss-sum images at
// nu = 2 pi k tau.
cplx discrete_moshinsky(int mu, const LatticeMomentum& rho, double tau, double eta = 0.0);

// Unrestricted-momentum variant; the theta-inversion identity needs the
// reflected point (-mu, -rho).
cplx discrete_moshinsky_any(int mu, double rho, double tau, double eta = 0.0);

// Prefactor shared by discrete_moshinsky and the theta-inversion identity.
cplx discrete_moshinsky_prefactor(int mu, const LatticeMomentum& rho, double tau);

// Euler-Maclaurin reduction of phi: integral over real order plus half the
// boundary term. The real-order integrand is tapered to zero ahead of the
// deep-tail region where Y_nu(tau) overwhelms the quadrature.
cplx euler_maclaurin_phi(int mu, const LatticeMomentum& rho, double tau);

TransitionReport asymptotic_moshinsky(int mu, const LatticeMomentum& rho, double tau);

enum class ResidualMode {
    exact,        // P = |psi|^2 - |M|^2
    first_order,  // P = |M + correction|^2 - |M|^2
};

struct ResidualPeak {
    double tau_star;
    double P_max;  // max over the range of |P|
    int sign;      // sign of P at the peak
};

ResidualPeak residual_max(int mu, const LatticeMomentum& rho, double tau_lo, double tau_hi,
                          double grid_step, ResidualMode mode = ResidualMode::exact);

}  // namespace polydit
