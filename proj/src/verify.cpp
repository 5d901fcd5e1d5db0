#include "polydit/verify.hpp"

#include <cmath>
#include <functional>

#include "polydit/moshinsky.hpp"
#include "polydit/shutter.hpp"
#include "polydit/specfun.hpp"
#include "polydit/spiral.hpp"
#include "polydit/transition.hpp"
#include "polydit/units.hpp"
#include "polydit/wave.hpp"

namespace polydit {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

void add(std::vector<CheckResult>& out, const std::string& suite, const std::string& name,
         double value, double bound) {
    out.push_back({suite, name, value, bound, value <= bound});
}

void suite_specfun(std::vector<CheckResult>& out) {
    const std::string S = "specfun";
    {
        BesselRow row = bessel_j_row(-11, 121, 50.0);
        double jmax = 0.0;
        for (double v : row.values) jmax = std::max(jmax, std::abs(v));
        double resid = 0.0;
        for (int n = -10; n <= 120; ++n)
            resid = std::max(resid,
                             std::abs(row.at(n - 1) + row.at(n + 1) - (2.0 * n / 50.0) * row.at(n)));
        add(out, S, "bessel_recurrence_relative", resid / jmax, 1e-10);
        double norm = row.at(0) * row.at(0);
        for (int n = 1; n <= 120; ++n) norm += 2.0 * row.at(n) * row.at(n);
        add(out, S, "bessel_normalization", std::abs(norm - 1.0), 1e-10);
    }
    {
        double alpha = 0.3 + kPi / 2.0, tau = 7.0;
        int cut = static_cast<int>(bessel_tail_cutoff(tau)) + 1;
        BesselRow row = bessel_j_row(-cut, cut, tau);
        cplx sum{0.0, 0.0};
        for (int nu = -cut; nu <= cut; ++nu) sum += row.at(nu) * std::polar(1.0, alpha * nu);
        add(out, S, "jacobi_anger", std::abs(sum - std::exp(kI * (tau * std::sin(alpha)))), 1e-9);
    }
    {
        double worst = 0.0;
        const double h = 1e-3;
        for (double xi = -3.0; xi <= 3.0; xi += 0.01) {
            FresnelCS a = fresnel(xi - h), b = fresnel(xi + h);
            double speed = std::hypot(b.C - a.C, b.S - a.S) / (2.0 * h);
            worst = std::max(worst, std::abs(speed - 1.0));
        }
        add(out, S, "cornu_unit_speed", worst, 1e-3);
    }
    add(out, "specfun", "lerch_ln2", std::abs(lerch_unit(kPi, 1.0) - cplx{std::log(2.0), 0.0}),
        1e-8);
    {
        double worst = 0.0;
        for (auto [th, a] : {std::pair<double, double>{0.9, 0.7}, {2.2, 3.5}, {kPi / 2, 0.5}}) {
            cplx lhs = lerch_unit(th, a);
            cplx rhs = 1.0 / a + std::exp(kI * th) * lerch_unit(th, a + 1.0);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        add(out, S, "lerch_contiguous", worst, 1e-9);
    }
    {
        FresnelCS eye = fresnel(10.0);
        add(out, S, "fresnel_eye", std::max(std::abs(eye.C - 0.5), std::abs(eye.S - 0.5)), 0.04);
    }
    add(out, S, "theta_sum_dominant", std::abs(gauss_theta_sum(5.0, 10.0) - cplx{1.0, 0.0}), 1e-4);
}

void suite_shutter(std::vector<CheckResult>& out) {
    const std::string S = "shutter";
    LatticeMomentum rho(0.3);
    {
        PolymerState st = ode_oracle_evolve(rho, 50.0, -90, 110, 0.005, {10});
        add(out, S, "oracle_density_mu10_tau50",
            std::abs(std::norm(st.at(10)) - density(10, rho, 50.0)), 1e-6);
    }
    {
        LatticeMomentum r2(1.1);
        double tau = 20.0, h = 1e-3;
        int mu = 4;
        cplx dpsi = (-psi(mu, r2, tau + 2 * h) + 8.0 * psi(mu, r2, tau + h) -
                     8.0 * psi(mu, r2, tau - h) + psi(mu, r2, tau - 2 * h)) /
                    (12.0 * h);
        cplx lhs = 2.0 * kI * dpsi;
        cplx rhs = 2.0 * psi(mu, r2, tau) - psi(mu + 1, r2, tau) - psi(mu - 1, r2, tau);
        add(out, S, "pde_residual", std::abs(lhs - rhs), 1e-5);
    }
    {
        double dt = 3.0;
        int cut = static_cast<int>(bessel_tail_cutoff(dt)) + 12;
        BesselRow row = bessel_j_row(-cut - 10, cut + 10, dt);
        double worst = 0.0;
        for (int mu = -5; mu <= 5; ++mu) {
            for (int mup = -5; mup <= 5; ++mup) {
                cplx acc{0.0, 0.0};
                for (int nu = -cut; nu <= cut; ++nu)
                    acc += row.at(nu - mu) * row.at(nu - mup);
                // i^{mu'-mu} phase is unimodular; compare magnitudes against delta
                double expect = (mu == mup) ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(std::abs(acc) - expect));
            }
        }
        add(out, S, "propagator_unitarity", worst, 1e-8);
    }
    {
        double worst = std::abs(psi(-3, rho, 0.0) - std::polar(1.0, -0.9));
        worst = std::max(worst, std::abs(psi(0, rho, 0.0) - cplx{1.0, 0.0}));
        worst = std::max(worst, std::abs(psi(5, rho, 0.0)));
        add(out, S, "initial_condition", worst, 1e-12);
    }
    {
        // locally time-averaged polymer density tracks the continuum result:
        // a window of two beat periods (the superimposed oscillation has
        // period ~pi) cancels the fast component, leaving the slow
        // O(1/sqrt(tau)) polymer residual
        double worst = 0.0;
        for (double c : {100.0, 140.0}) {
            double acc = 0.0;
            int n = 0;
            for (double t = c - kPi; t <= c + kPi + 1e-9; t += kPi / 40.0, ++n)
                acc += density(10, rho, t);
            worst = std::max(worst, std::abs(acc / n - std::norm(moshinsky(10.0, 0.3, c))));
        }
        add(out, S, "local_average_continuum", worst, 0.03);
    }
}

void suite_transition(std::vector<CheckResult>& out) {
    const std::string S = "transition";
    {
        // theta inversion identity with matched regularization; when rho*tau - mu
        // is an integer K the two half-line sums double-count nu = K
        struct Triple {
            int mu;
            double rho, tau;
        };
        double worst = 0.0;
        for (Triple t : {Triple{10, 0.3, 250.0}, {5, 1.1, 100.3}, {3, 2.5, 60.2}}) {
            double eta = std::max(1e-4, 36.0 / (16.0 * t.tau * t.tau));
            cplx lhs = discrete_moshinsky_any(t.mu, t.rho, t.tau, eta) +
                       discrete_moshinsky_any(-t.mu, -t.rho, t.tau, eta);
            cplx pref = discrete_moshinsky_prefactor(t.mu, LatticeMomentum(t.rho), t.tau);
            cplx rhs = pref * gauss_theta_sum(t.tau, eta);
            double s = t.rho * t.tau - t.mu;
            if (std::abs(s - std::round(s)) < 1e-9) {
                double K = std::round(s);
                rhs += pref * std::exp(kI * (K * K / (2.0 * t.tau))) * std::exp(-eta * K * K);
            }
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        add(out, S, "eq15_theta_inversion", worst, 1e-3);
    }
    {
        LatticeMomentum rho(0.3);
        cplx m = discrete_moshinsky(10, rho, 2000.0);
        cplx phase = std::polar(1.0, 0.3 * 10 - 0.5 * 0.3 * 0.3 * 2000.0);
        add(out, S, "eq16_plane_wave_limit", std::abs(m / phase - 1.0), 0.05);
    }
    {
        auto err = [](int nu, double tau) {
            cplx exact = bessel_j(nu, tau) * std::polar(1.0, -tau + kPi * nu / 2.0);
            return std::abs(asymptotic_bessel(nu, tau) - exact) / std::abs(bessel_j(nu, tau));
        };
        double e_20_400 = err(20, 400.0), e_10_100 = err(10, 100.0);
        add(out, S, "asymptotic_bessel_error", e_20_400, 2e-2);
        add(out, S, "asymptotic_bessel_ordering", e_20_400 / e_10_100, 1.0);
    }
    {
        double nu = 50.0, a = 1.0;
        double ratio = std::exp(std::lgamma(nu + a + 0.5) - std::lgamma(nu - a + 0.5));
        add(out, S, "gamma_ratio_approx", std::abs(ratio / std::pow(nu, 2.0 * a) - 1.0), 1e-3);
    }
    {
        LatticeMomentum rho(0.3);
        double e250 = std::abs(euler_maclaurin_phi(10, rho, 250.0) - phi(10, rho, 250.0));
        double e100 = std::abs(euler_maclaurin_phi(10, rho, 100.0) - phi(10, rho, 100.0));
        double e1000 = std::abs(euler_maclaurin_phi(10, rho, 1000.0) - phi(10, rho, 1000.0));
        add(out, S, "euler_maclaurin_error", e250, 0.02);
        add(out, S, "euler_maclaurin_improves", e1000 / e100, 1.0);
    }
    {
        // polymer Schroedinger residual of the discrete Moshinsky function,
        // averaged over one floor-jump period h = 1/(2 rho) to wash out the
        // O(rho/sqrt(tau)) boundary jumps
        int mu = 5;
        double rho = 0.2, tau0 = 100.5, h = 1.0 / (2.0 * rho);
        auto m = [&](int site, double tau) { return discrete_moshinsky_any(site, rho, tau); };
        cplx deriv_avg = 2.0 * kI * (m(mu, tau0 + h) - m(mu, tau0 - h)) / (2.0 * h);
        cplx spatial_avg{0.0, 0.0};
        const int N = 200;
        for (int j = 0; j <= N; ++j) {
            double tau = tau0 - h + 2.0 * h * j / N;
            double w = (j == 0 || j == N) ? 0.5 : 1.0;
            spatial_avg += w * (2.0 * m(mu, tau) - m(mu + 1, tau) - m(mu - 1, tau));
        }
        spatial_avg /= static_cast<double>(N);
        add(out, S, "discrete_moshinsky_pde", std::abs(deriv_avg - spatial_avg), 1e-3);
    }
    {
        // |psi - M| decays like 1/sqrt(tau): the correction term contributes
        // 1/sqrt(8 pi tau) and the second stationary-phase branch (the fast
        // beat) up to 2/sqrt(2 pi tau), so the normalized residual stays O(1)
        double worst = 0.0;
        for (double tau : {50.0, 100.0, 200.0, 400.0}) {
            int mu = static_cast<int>(0.1 * tau);
            LatticeMomentum rho(0.2);
            double e = std::abs(psi(mu, rho, tau) - moshinsky(mu, 0.2, tau));
            worst = std::max(worst, e * std::sqrt(8.0 * kPi * tau));
        }
        add(out, S, "psi_to_moshinsky_scaling", worst, 5.0);
    }
}

void suite_wave(std::vector<CheckResult>& out) {
    const std::string S = "wave";
    {
        struct Pt {
            int mu;
            double rho, tau;
        };
        const Pt pts[10] = {{3, 0.5, 10.0},  {-5, 0.4, 5.0}, {0, 0.5, 7.0},  {2, 1.1, 3.0},
                            {7, 0.4, 15.0},  {10, 1.1, 20.0}, {-3, 1.1, 12.0}, {1, 0.4, 18.0},
                            {5, 0.5, 1.0},   {-2, 0.5, 16.0}};
        double worst = 0.0;
        for (const Pt& p : pts) {
            LatticeMomentum rho(p.rho);
            cplx cf = closed_form(p.mu, rho, p.tau);
            cplx pv = pv_solution(p.mu, rho, p.tau);
            int margin = static_cast<int>(std::ceil(p.tau)) + 21;
            WaveState st = wave_ode_oracle(rho, p.tau, p.mu - margin, p.mu + margin, 0.005, {p.mu});
            cplx od = st.at(p.mu);
            worst = std::max({worst, std::abs(cf - pv), std::abs(cf - od), std::abs(pv - od)});
        }
        add(out, S, "triple_agreement", worst, 1e-3);
    }
    {
        WaveState s{-100, 100, 0.0, {}, {}};
        s.psi.resize(201);
        s.vel.assign(201, cplx{0.0, 0.0});
        for (int mu = -100; mu <= 100; ++mu)
            s.psi[static_cast<std::size_t>(mu + 100)] =
                std::exp(-std::pow(mu / 8.0, 2)) * std::polar(1.0, 0.5 * mu);
        double e0 = wave_energy(s);
        WaveState sf = wave_evolve(s, WaveBoundary::frozen, {0, 0}, {0, 0}, 50.0, 1e-3);
        add(out, S, "energy_drift", std::abs(wave_energy(sf) - e0) / e0, 1e-6);
    }
    {
        LatticeMomentum rho(0.5);
        add(out, S, "excision_stability",
            std::abs(pv_solution(3, rho, 10.0, 0.15) - pv_solution(3, rho, 10.0, 0.075)), 1e-5);
    }
    {
        // second-order convergence against a Richardson reference
        LatticeMomentum rho(0.5);
        auto probe = [&](double dt) {
            WaveState st = wave_ode_oracle(rho, 5.0, -30, 35, dt, {2});
            return st.at(2);
        };
        cplx ref = (4.0 * probe(0.025) - probe(0.05)) / 3.0;
        double dts[3] = {0.2, 0.1, 0.05};
        double lx = 0.0, ly = 0.0, lxx = 0.0, lxy = 0.0;
        for (double dt : dts) {
            double x = std::log(dt), y = std::log(std::abs(probe(dt) - ref));
            lx += x;
            ly += y;
            lxx += x * x;
            lxy += x * y;
        }
        double slope = (3.0 * lxy - lx * ly) / (3.0 * lxx - lx * lx);
        add(out, S, "leapfrog_order_deviation", std::abs(slope - 2.0), 0.1);
    }
    {
        LatticeMomentum rho(0.5);
        NoDitReport rep = no_dit_check(10, rho, 200.0);
        add(out, S, "no_dit_period",
            std::abs(rep.dominant_period - rep.expected_period) / rep.expected_period, 0.05);
        add(out, S, "no_dit_monotone_run", rep.longest_monotone_run / rep.expected_period, 1.0);
        add(out, S, "no_dit_schrodinger_contrast", rep.schrodinger_crossings_ok ? 0.0 : 1.0, 0.5);
    }
    {
        LatticeMomentum rho(0.5);
        double worst = std::abs(pv_solution(-4, rho, 0.0) - std::polar(1.0, -2.0));
        worst = std::max(worst, std::abs(pv_solution(4, rho, 0.0)));
        add(out, S, "pv_initial_condition", worst, 1e-5);
    }
    {
        // Cesaro-averaged partial sums of the half-line phase sum converge to
        // the p.v. kernel 1/2 + (i/2) cot(zeta/2)
        double zeta = 0.7;
        const long N = 10000;
        cplx partial{0.0, 0.0}, cesaro{0.0, 0.0};
        for (long n = 0; n <= N; ++n) {
            partial += std::exp(kI * (zeta * static_cast<double>(n)));
            cesaro += partial;
        }
        cesaro /= static_cast<double>(N + 1);
        LatticeMomentum rho(0.5);
        FourierInitialData f = fourier_initial(rho);
        add(out, S, "kernel_cesaro", std::abs(cesaro - f.pv_kernel(rho.rho + zeta)), 1e-3);
    }
    {
        // plane wave on a periodic ring oscillates at eps_kappa
        const int N = 64;
        double kappa = 2.0 * kPi * 5.0 / N;
        double eps = dispersion(kappa);
        WaveState s{0, N - 1, 0.0, {}, {}};
        s.psi.resize(N);
        s.vel.resize(N);
        for (int mu = 0; mu < N; ++mu) {
            s.psi[static_cast<std::size_t>(mu)] = std::polar(1.0, kappa * mu);
            s.vel[static_cast<std::size_t>(mu)] = -kI * eps * s.psi[static_cast<std::size_t>(mu)];
        }
        double lx = 0.0, ly = 0.0, lxx = 0.0, lxy = 0.0;
        int n = 0;
        double prev_arg = 0.0, offset = 0.0;
        for (double tau = 0.5; tau <= 20.0; tau += 0.5) {
            s = wave_evolve(s, WaveBoundary::periodic, {0, 0}, {0, 0}, tau, 0.01);
            double a = std::arg(s.psi[0]);
            if (n > 0) {  // unwrap
                while (a + offset - prev_arg > kPi) offset -= 2.0 * kPi;
                while (a + offset - prev_arg < -kPi) offset += 2.0 * kPi;
            }
            double ph = a + offset;
            prev_arg = ph;
            lx += tau;
            ly += ph;
            lxx += tau * tau;
            lxy += tau * ph;
            ++n;
        }
        double slope = (n * lxy - lx * ly) / (n * lxx - lx * lx);
        add(out, S, "plane_wave_dispersion", std::abs(-slope - eps), 1e-4);
    }
}

}  // namespace

std::vector<CheckResult> verify_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    bool known = false;
    if (suite == "specfun" || suite == "all") {
        suite_specfun(out);
        known = true;
    }
    if (suite == "shutter" || suite == "all") {
        suite_shutter(out);
        known = true;
    }
    if (suite == "transition" || suite == "all") {
        suite_transition(out);
        known = true;
    }
    if (suite == "wave" || suite == "all") {
        suite_wave(out);
        known = true;
    }
    if (!known) throw invalid_input("verify_suite: unknown suite '" + suite + "'");
    return out;
}

}  // namespace polydit
