#pragma once

#include "polydit/types.hpp"
#include "polydit/units.hpp"

namespace polydit {

// Free lattice propagator i^{nu-mu} J_{nu-mu}(tau-tau0) e^{-i(tau-tau0)}.
cplx free_propagator(int mu, double tau, int nu, double tau0);

// Phi_mu(rho, tau) = sum_{nu <= -mu} J_nu(tau) e^{i(rho + pi/2) nu},
// truncated where the Bessel tail bound pushes the discarded mass below tol.
cplx phi(int mu, const LatticeMomentum& rho, double tau, double tol = 1e-12);

// psi_mu(tau) = e^{-i(tau - rho mu)} Phi_mu(rho, tau).
cplx psi(int mu, const LatticeMomentum& rho, double tau);

// |psi|^2 = |Phi|^2.
double density(int mu, const LatticeMomentum& rho, double tau);

// Double-cosine form of the density, O(N^2); cross-check only.
double density_double_sum(int mu, const LatticeMomentum& rho, double tau, int nu_lo, int nu_hi);

Profile profile_time(int mu, const LatticeMomentum& rho, const std::vector<double>& tau_grid,
                     bool parallel = true);

// Spatial profile via one shared Bessel row and running prefix sums, O(N + sites).
Profile profile_space(double tau, const LatticeMomentum& rho, int mu_lo, int mu_hi,
                      bool parallel = true);

// Theta(tau - mu/rho): 0 before the classical time of flight, 1 after.
double classical_profile(double mu, double rho, double tau);

// Integrates the lattice Schroedinger chain 2i dpsi/dtau = 2 psi_mu - psi_{mu+1} - psi_{mu-1}
// with RK4 from arbitrary initial data; sites outside the window are frozen at
// the supplied ghost values.
PolymerState lattice_schrodinger_evolve(const PolymerState& initial, cplx ghost_lo, cplx ghost_hi,
                                        double tau_end, double dt);

// Shutter-problem oracle: initial data e^{i rho mu} Theta(-mu) on the window,
// frozen plane-wave / vacuum ghosts. Probe sites must respect the light-cone
// margin 1.5 tau_end + 20.
PolymerState ode_oracle_evolve(const LatticeMomentum& rho, double tau_end, int mu_lo, int mu_hi,
                               double dt = 0.005, const std::vector<int>& probes = {});

}  // namespace polydit
