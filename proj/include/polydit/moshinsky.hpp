#pragma once

#include "polydit/types.hpp"

namespace polydit {

// xi = (rho tau - mu) / sqrt(pi tau); requires tau > 0.
double fresnel_arg(double mu, double rho, double tau);

// M(mu, rho, tau) = (e^{-i pi/4}/sqrt 2) e^{i(rho mu - rho^2 tau/2)}
//                   {[1/2 + C(xi)] + i [1/2 + S(xi)]}
cplx moshinsky(double mu, double rho, double tau);

// |M|^2 as a function of xi alone: (1/2){[1/2+C]^2 + [1/2+S]^2}.
double moshinsky_density(double xi);

// Shutter with reflectivity: M(mu, rho, tau) + e^{i pi alpha} M(mu, -rho, tau).
cplx with_reflectivity(double mu, double rho, double tau, double alpha);

// delta-tau = 0.85 sqrt(pi mu / rho^3)  (valid for rho*mu >> 1).
double time_width(double mu, double rho);

// delta-mu = 0.85 sqrt(pi tau).
double space_width(double tau);

Profile moshinsky_profile_time(double mu, double rho, const std::vector<double>& tau_grid,
                               bool parallel = true);
Profile moshinsky_profile_space(double tau, double rho, double mu_lo, double mu_hi, double step,
                                bool parallel = true);

}  // namespace polydit
