#include "polydit/moshinsky.hpp"

#include <cmath>

#include "polydit/specfun.hpp"

namespace polydit {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};
}  // namespace

double fresnel_arg(double mu, double rho, double tau) {
    if (!(tau > 0.0)) throw invalid_input("fresnel_arg: tau must be positive");
    return (rho * tau - mu) / std::sqrt(kPi * tau);
}

cplx moshinsky(double mu, double rho, double tau) {
    if (!(tau > 0.0)) throw invalid_input("moshinsky: tau must be positive");
    FresnelCS cs = fresnel(fresnel_arg(mu, rho, tau));
    cplx brace{0.5 + cs.C, 0.5 + cs.S};
    return (std::polar(1.0, -kPi / 4.0) / std::sqrt(2.0)) *
           std::polar(1.0, rho * mu - 0.5 * rho * rho * tau) * brace;
}

double moshinsky_density(double xi) {
    FresnelCS cs = fresnel(xi);
    double re = 0.5 + cs.C, im = 0.5 + cs.S;
    return 0.5 * (re * re + im * im);
}

cplx with_reflectivity(double mu, double rho, double tau, double alpha) {
    if (!(tau > 0.0)) throw invalid_input("with_reflectivity: tau must be positive");
    return moshinsky(mu, rho, tau) + std::polar(1.0, kPi * alpha) * moshinsky(mu, -rho, tau);
}

double time_width(double mu, double rho) {
    if (!(mu > 0.0) || !(rho > 0.0)) throw invalid_input("time_width: need mu > 0, rho > 0");
    return 0.85 * std::sqrt(kPi * mu / (rho * rho * rho));
}

double space_width(double tau) {
    if (!(tau >= 0.0)) throw invalid_input("space_width: tau < 0");
    return 0.85 * std::sqrt(kPi * tau);
}

Profile moshinsky_profile_time(double mu, double rho, const std::vector<double>& tau_grid,
                               bool parallel) {
    if (tau_grid.empty()) throw invalid_input("moshinsky_profile_time: empty grid");
    Profile p{ProfileAxis::time_at_fixed_site, Dynamics::continuum, tau_grid,
              std::vector<double>(tau_grid.size(), 0.0)};
    const long n = static_cast<long>(tau_grid.size());
#pragma omp parallel for if (parallel)
    for (long i = 0; i < n; ++i) {
        double tau = tau_grid[static_cast<std::size_t>(i)];
        p.density[static_cast<std::size_t>(i)] =
            tau > 0.0 ? moshinsky_density(fresnel_arg(mu, rho, tau)) : (mu <= 0.0 ? 1.0 : 0.0);
    }
    return p;
}

Profile moshinsky_profile_space(double tau, double rho, double mu_lo, double mu_hi, double step,
                                bool parallel) {
    if (!(step > 0.0) || mu_lo > mu_hi) throw invalid_input("moshinsky_profile_space: bad range");
    if (!(tau > 0.0)) throw invalid_input("moshinsky_profile_space: tau must be positive");
    Profile p{ProfileAxis::site_at_fixed_time, Dynamics::continuum, {}, {}};
    const long n = static_cast<long>(std::floor((mu_hi - mu_lo) / step + 1e-9)) + 1;
    p.coordinate.resize(static_cast<std::size_t>(n));
    p.density.resize(static_cast<std::size_t>(n));
#pragma omp parallel for if (parallel)
    for (long i = 0; i < n; ++i) {
        double mu = mu_lo + step * static_cast<double>(i);
        p.coordinate[static_cast<std::size_t>(i)] = mu;
        p.density[static_cast<std::size_t>(i)] = moshinsky_density(fresnel_arg(mu, rho, tau));
    }
    return p;
}

}  // namespace polydit
