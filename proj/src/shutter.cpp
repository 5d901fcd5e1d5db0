#include "polydit/shutter.hpp"

#include <cmath>

#include "polydit/specfun.hpp"

namespace polydit {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

cplx ipow(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}
}  // namespace

cplx free_propagator(int mu, double tau, int nu, double tau0) {
    if (tau < tau0) throw invalid_input("free_propagator: tau < tau0");
    double dt = tau - tau0;
    int n = nu - mu;
    return ipow(n) * bessel_j(n, dt) * std::exp(-kI * dt);
}

cplx phi(int mu, const LatticeMomentum& rho, double tau, double tol) {
    if (!std::isfinite(tau) || tau < 0.0) throw invalid_input("phi: bad tau");
    int cut = static_cast<int>(std::ceil(bessel_tail_cutoff(tau)));
    int hi = std::min(-mu, cut);
    int lo = -cut;
    if (hi < lo) return {0.0, 0.0};  // entire sum is beyond the tail bound
    BesselRow row = bessel_j_row(lo, hi, tau, std::min(tol, 1e-12));
    double alpha = rho.rho + kPi / 2.0;
    cplx sum{0.0, 0.0};
    for (int nu = lo; nu <= hi; ++nu)
        sum += row.at(nu) * std::polar(1.0, alpha * nu);
    return sum;
}

cplx psi(int mu, const LatticeMomentum& rho, double tau) {
    return std::polar(1.0, -(tau - rho.rho * mu)) * phi(mu, rho, tau);
}

double density(int mu, const LatticeMomentum& rho, double tau) {
    return std::norm(phi(mu, rho, tau));
}

double density_double_sum(int mu, const LatticeMomentum& rho, double tau, int nu_lo, int nu_hi) {
    if (nu_hi > -mu) throw invalid_input("density_double_sum: truncation must stay below -mu");
    BesselRow row = bessel_j_row(nu_lo, nu_hi, tau, 1e-12);
    double alpha = rho.rho + kPi / 2.0;
    double sum = 0.0;
    for (int nu = nu_lo; nu <= nu_hi; ++nu)
        for (int al = nu_lo; al <= nu_hi; ++al)
            sum += row.at(nu) * row.at(al) * std::cos(alpha * (nu - al));
    return sum;
}

Profile profile_time(int mu, const LatticeMomentum& rho, const std::vector<double>& tau_grid,
                     bool parallel) {
    if (tau_grid.empty()) throw invalid_input("profile_time: empty grid");
    for (std::size_t i = 1; i < tau_grid.size(); ++i)
        if (!(tau_grid[i] > tau_grid[i - 1]))
            throw invalid_input("profile_time: grid not strictly increasing");
    Profile p{ProfileAxis::time_at_fixed_site, Dynamics::polymer, tau_grid,
              std::vector<double>(tau_grid.size(), 0.0)};
    const long n = static_cast<long>(tau_grid.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < n; ++i)
            p.density[static_cast<std::size_t>(i)] = density(mu, rho, tau_grid[static_cast<std::size_t>(i)]);
    } else {
        for (long i = 0; i < n; ++i)
            p.density[static_cast<std::size_t>(i)] = density(mu, rho, tau_grid[static_cast<std::size_t>(i)]);
    }
    return p;
}

Profile profile_space(double tau, const LatticeMomentum& rho, int mu_lo, int mu_hi, bool parallel) {
    if (mu_lo > mu_hi) throw invalid_input("profile_space: empty site range");
    if (!std::isfinite(tau) || tau < 0.0) throw invalid_input("profile_space: bad tau");
    int cut = static_cast<int>(std::ceil(bessel_tail_cutoff(tau)));
    BesselRow row = bessel_j_row(-cut, cut, tau, 1e-12);
    double alpha = rho.rho + kPi / 2.0;
    // prefix[k] = sum_{nu <= -cut+k} J_nu e^{i alpha nu}; Phi_mu = prefix at nu = -mu
    std::vector<cplx> prefix(static_cast<std::size_t>(2 * cut) + 1);
    cplx acc{0.0, 0.0};
    for (int nu = -cut; nu <= cut; ++nu) {
        acc += row.at(nu) * std::polar(1.0, alpha * nu);
        prefix[static_cast<std::size_t>(nu + cut)] = acc;
    }
    Profile p{ProfileAxis::site_at_fixed_time, Dynamics::polymer, {}, {}};
    const long n = mu_hi - mu_lo + 1;
    p.coordinate.resize(static_cast<std::size_t>(n));
    p.density.resize(static_cast<std::size_t>(n));
#pragma omp parallel for if (parallel)
    for (long i = 0; i < n; ++i) {
        int mu = mu_lo + static_cast<int>(i);
        p.coordinate[static_cast<std::size_t>(i)] = mu;
        int top = -mu;
        double d;
        if (top < -cut)
            d = 0.0;
        else if (top >= cut)
            d = std::norm(prefix.back());
        else
            d = std::norm(prefix[static_cast<std::size_t>(top + cut)]);
        p.density[static_cast<std::size_t>(i)] = d;
    }
    return p;
}

double classical_profile(double mu, double rho, double tau) {
    if (!(rho > 0.0)) throw invalid_input("classical_profile: rho must be positive");
    return heaviside(tau - mu / rho);
}

namespace {

// RHS of 2i dpsi/dtau = 2 psi - psi_+ - psi_-  =>  dpsi/dtau = (i/2)(psi_+ + psi_- - 2 psi)
void rhs(const std::vector<cplx>& y, cplx ghost_lo, cplx ghost_hi, std::vector<cplx>& out) {
    const std::size_t n = y.size();
    for (std::size_t i = 0; i < n; ++i) {
        cplx left = (i == 0) ? ghost_lo : y[i - 1];
        cplx right = (i + 1 == n) ? ghost_hi : y[i + 1];
        out[i] = cplx{0.0, 0.5} * (left + right - 2.0 * y[i]);
    }
}

}  // namespace

PolymerState lattice_schrodinger_evolve(const PolymerState& initial, cplx ghost_lo, cplx ghost_hi,
                                        double tau_end, double dt) {
    if (!(dt > 0.0) || dt > 0.01) throw invalid_input("lattice_schrodinger_evolve: need 0 < dt <= 0.01");
    if (!(tau_end >= initial.tau)) throw invalid_input("lattice_schrodinger_evolve: tau_end in the past");
    PolymerState s = initial;
    double span = tau_end - initial.tau;
    long nsteps = static_cast<long>(std::ceil(span / dt - 1e-12));
    if (nsteps == 0) {
        s.tau = tau_end;
        return s;
    }
    double h = span / static_cast<double>(nsteps);
    const std::size_t n = s.amplitudes.size();
    std::vector<cplx> k1(n), k2(n), k3(n), k4(n), tmp(n);
    for (long step = 0; step < nsteps; ++step) {
        auto& y = s.amplitudes;
        rhs(y, ghost_lo, ghost_hi, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        rhs(tmp, ghost_lo, ghost_hi, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        rhs(tmp, ghost_lo, ghost_hi, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
        rhs(tmp, ghost_lo, ghost_hi, k4);
        for (std::size_t i = 0; i < n; ++i)
            y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    s.tau = tau_end;
    return s;
}

PolymerState ode_oracle_evolve(const LatticeMomentum& rho, double tau_end, int mu_lo, int mu_hi,
                               double dt, const std::vector<int>& probes) {
    if (mu_lo > mu_hi) throw invalid_input("ode_oracle_evolve: empty window");
    if (!(tau_end >= 0.0)) throw invalid_input("ode_oracle_evolve: tau_end < 0");
    double margin = 1.5 * tau_end + 20.0;
    for (int p : probes) {
        if (p - mu_lo < margin || mu_hi - p < margin)
            throw invalid_input("ode_oracle_evolve: probe site violates light-cone margin");
    }
    PolymerState init{mu_lo, mu_hi, 0.0, {}};
    init.amplitudes.resize(static_cast<std::size_t>(mu_hi - mu_lo) + 1);
    for (int mu = mu_lo; mu <= mu_hi; ++mu)
        init.amplitudes[static_cast<std::size_t>(mu - mu_lo)] = initial_wavefunction(mu, rho);
    // frozen ghosts continue the initial data: plane wave below, vacuum above
    cplx ghost_lo = std::polar(1.0, rho.rho * (mu_lo - 1));
    cplx ghost_hi = (mu_hi + 1 <= 0) ? std::polar(1.0, rho.rho * (mu_hi + 1)) : cplx{0.0, 0.0};
    return lattice_schrodinger_evolve(init, ghost_lo, ghost_hi, tau_end, dt);
}

}  // namespace polydit
