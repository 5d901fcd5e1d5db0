#include "polydit/wave.hpp"

#include <cmath>

#include "polydit/shutter.hpp"
#include "polydit/specfun.hpp"
#include "polydit/spiral.hpp"

namespace polydit {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

const double kGLx[10] = {0.0765265211334973, 0.2277858511416451, 0.3737060887154196,
                         0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
                         0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
                         0.9931285991850949};
const double kGLw[10] = {0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
                         0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
                         0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
                         0.0176140071391521};

double sinc_eps(double eps, double tau) {
    // sin(eps*tau)/eps with the eps -> 0 limit
    if (std::abs(eps) < 1e-8) return tau * (1.0 - eps * eps * tau * tau / 6.0);
    return std::sin(eps * tau) / eps;
}

void check_wave_rho(const LatticeMomentum& rho) {
    if (rho.rho <= 0.0 || rho.rho >= kPi - 1e-12)
        throw invalid_input("wave dynamics require rho strictly inside (0, pi)");
}
}  // namespace

double dispersion(double kappa) { return 2.0 * std::abs(std::sin(0.5 * kappa)); }

FourierInitialData fourier_initial(const LatticeMomentum& rho) {
    check_wave_rho(rho);
    double r = rho.rho;
    return {kPi, r, [r](double kappa) -> cplx {
                double z = kappa - r;
                return cplx{0.5, 0.5 / std::tan(0.5 * z)};
            }};
}

cplx pv_solution(int mu, const LatticeMomentum& rho, double tau, double excision) {
    check_wave_rho(rho);
    if (!(tau >= 0.0)) throw invalid_input("pv_solution: tau < 0");
    if (!(excision > 0.0)) throw invalid_input("pv_solution: excision must be positive");
    const double r = rho.rho;
    const double eps_r = dispersion(r);
    double delta = std::min({excision, 0.45 * r, 0.45 * (kPi - r)});

    FourierInitialData f = fourier_initial(rho);
    auto g = [&](double kappa) -> cplx {
        double ek = dispersion(kappa);
        cplx osc = std::cos(ek * tau) - kI * eps_r * sinc_eps(ek, tau);
        return f.pv_kernel(kappa) * std::exp(kI * (kappa * static_cast<double>(mu))) * osc;
    };
    auto integrate = [&](const std::function<cplx(double)>& fn, double a, double b) -> cplx {
        double rate = std::abs(static_cast<double>(mu)) + tau + 1.0;
        double w = std::min(0.1, 12.0 / rate);
        int npan = std::max(1, static_cast<int>(std::ceil((b - a) / w)));
        cplx acc{0.0, 0.0};
        for (int p = 0; p < npan; ++p) {
            double lo = a + (b - a) * p / npan;
            double up = a + (b - a) * (p + 1) / npan;
            double c = 0.5 * (lo + up), h = 0.5 * (up - lo);
            for (int j = 0; j < 10; ++j)
                acc += h * kGLw[j] * (fn(c + h * kGLx[j]) + fn(c - h * kGLx[j]));
        }
        return acc;
    };

    cplx pv = integrate(g, -kPi, r - delta) + integrate(g, r + delta, kPi);
    // symmetric fold through the pole: the 1/h parts cancel pairwise
    pv += integrate([&](double h) { return g(r + h) + g(r - h); }, 0.0, delta);
    if (!std::isfinite(pv.real()) || !std::isfinite(pv.imag()))
        throw numerical_error("pv_solution: quadrature failed");
    return 0.5 * std::exp(kI * (r * mu - eps_r * tau)) + pv / (2.0 * kPi);
}

cplx closed_form(int mu, const LatticeMomentum& rho, double tau, int n_terms) {
    check_wave_rho(rho);
    if (!(tau >= 0.0)) throw invalid_input("closed_form: tau < 0");
    const double r = rho.rho;
    const double eps_r = dispersion(r);
    int cut = static_cast<int>(std::ceil(2.0 * tau + 10.0 * std::cbrt(2.0 * tau) + 40.0));
    if (n_terms > cut) cut = n_terms;
    BesselRow row = bessel_j_row(-cut, cut, 2.0 * tau, 1e-12);

    cplx val = 0.5 * std::exp(kI * (r * mu - eps_r * tau));      // delta part
    if (std::abs(2 * mu) <= cut) val += 0.5 * row.at(2 * mu);    // sgn(0) site
    val += 0.5 * kI * std::exp(kI * (r * mu)) * std::sin(eps_r * tau);  // delta-subtraction correction

    // even sector: -1/2 sum_m J_{2m}(2 tau) sgn(mu + m) e^{i rho (mu + m)}
    int mlim = cut / 2;
    cplx even{0.0, 0.0};
    for (int m = -mlim; m <= mlim; ++m) {
        int s = mu + m;
        if (s == 0) continue;
        double sgn = s > 0 ? 1.0 : -1.0;
        even += row.at(2 * m) * sgn * std::exp(kI * (r * static_cast<double>(s)));
    }
    val -= 0.5 * even;

    // odd sector: geometric partial sums of the half-line initial data
    cplx geom_den = 1.0 - std::exp(-kI * r);
    cplx odd{0.0, 0.0};
    for (int nu = -cut; nu <= cut; nu += 1) {
        if ((nu & 1) == 0) continue;
        if (2 * mu + nu >= 0) continue;  // only mu + nu/2 < 0 contributes
        double N = -static_cast<double>(mu) - 0.5 * nu + 0.5;  // integer >= 1
        cplx gsum = (1.0 - std::exp(-kI * (r * N))) / geom_den;
        odd += row.at(nu) * gsum;
    }
    val += 2.0 * kI * std::sin(0.5 * r) * odd;
    return val;
}

cplx closed_form_reference(int mu, const LatticeMomentum& rho, double tau, int n_terms) {
    check_wave_rho(rho);
    const double r = rho.rho;
    const double eps_r = dispersion(r);
    int cut = static_cast<int>(std::ceil(2.0 * tau + 10.0 * std::cbrt(2.0 * tau) + 40.0));
    if (n_terms > cut) cut = n_terms;
    int nlim = cut / 2;
    BesselRow row = bessel_j_row(-cut, cut, 2.0 * tau, 1e-12);

    cplx val = 0.5 * std::exp(kI * (r * mu - eps_r * tau));
    val -= (std::cos(r) / std::sin(r)) * std::sin(0.5 * r);
    cplx sum{0.0, 0.0};
    for (int nu = -nlim; nu <= nlim; ++nu) {
        if (nu == -mu) continue;  // excluded index (vanishing denominator)
        double s = static_cast<double>(mu + nu);
        cplx bracket{1.0, 0.0};
        if (2.0 - s >= 0.0) {
            double b = -0.5 * s;
            // b in {0,-1} makes 2F1(1,b;1+b;.) singular; those guard terms are dropped
            if (!(std::abs(b - std::round(b)) < 1e-12 && std::round(b) <= 0.0))
                bracket -= gauss_2f1_unit(b, 2.0 * r);
        }
        if (2.0 + s >= 0.0) {
            double b = 0.5 * s;
            if (!(std::abs(b - std::round(b)) < 1e-12 && std::round(b) <= 0.0))
                bracket -= gauss_2f1_unit(b, -2.0 * r);
        }
        sum += (row.at(2 * nu) / s) * bracket;
    }
    val += (2.0 / (kPi * kI)) * sum;
    return val;
}

OffsetReport closed_form_offset_report(int mu, const LatticeMomentum& rho, double tau_lo,
                                       double tau_hi, int n_samples) {
    if (n_samples < 2 || !(tau_hi > tau_lo)) throw invalid_input("offset_report: bad sampling");
    std::vector<cplx> diff(static_cast<std::size_t>(n_samples));
    for (int k = 0; k < n_samples; ++k) {
        double tau = tau_lo + (tau_hi - tau_lo) * k / (n_samples - 1);
        diff[static_cast<std::size_t>(k)] =
            closed_form_reference(mu, rho, tau) - closed_form(mu, rho, tau);
    }
    cplx mean{0.0, 0.0};
    for (const cplx& d : diff) mean += d;
    mean /= static_cast<double>(n_samples);
    double resid = 0.0;
    for (const cplx& d : diff) resid = std::max(resid, std::abs(d - mean));
    return {mean, resid, n_samples};
}

WaveState wave_evolve(const WaveState& initial, WaveBoundary bc, cplx ghost_lo, cplx ghost_hi,
                      double tau_end, double dt,
                      const std::function<void(const WaveState&)>& on_step) {
    if (!(dt > 0.0) || dt > 0.5) throw invalid_input("wave_evolve: CFL requires 0 < dt <= 0.5");
    if (!(tau_end >= initial.tau)) throw invalid_input("wave_evolve: tau_end in the past");
    WaveState s = initial;
    const std::size_t n = s.psi.size();
    if (s.vel.size() != n || n == 0) throw invalid_input("wave_evolve: malformed state");
    double span = tau_end - initial.tau;
    long nsteps = static_cast<long>(std::ceil(span / dt - 1e-12));
    if (nsteps == 0) {
        s.tau = tau_end;
        return s;
    }
    double h = span / static_cast<double>(nsteps);
    auto accel = [&](const std::vector<cplx>& y, std::vector<cplx>& out) {
        for (std::size_t i = 0; i < n; ++i) {
            cplx left = (i == 0) ? (bc == WaveBoundary::periodic ? y[n - 1] : ghost_lo) : y[i - 1];
            cplx right = (i + 1 == n) ? (bc == WaveBoundary::periodic ? y[0] : ghost_hi) : y[i + 1];
            out[i] = left + right - 2.0 * y[i];
        }
    };
    std::vector<cplx> a(n), a_new(n);
    accel(s.psi, a);
    for (long step = 0; step < nsteps; ++step) {
        for (std::size_t i = 0; i < n; ++i)
            s.psi[i] += h * s.vel[i] + 0.5 * h * h * a[i];
        accel(s.psi, a_new);
        for (std::size_t i = 0; i < n; ++i)
            s.vel[i] += 0.5 * h * (a[i] + a_new[i]);
        a.swap(a_new);
        s.tau = initial.tau + h * static_cast<double>(step + 1);
        if (on_step) on_step(s);
    }
    s.tau = tau_end;
    return s;
}

double wave_energy(const WaveState& s) {
    double e = 0.0;
    for (const cplx& v : s.vel) e += std::norm(v);
    for (std::size_t i = 0; i + 1 < s.psi.size(); ++i) e += std::norm(s.psi[i + 1] - s.psi[i]);
    return e;
}

namespace {

WaveState wave_shutter_state(const LatticeMomentum& rho, int mu_lo, int mu_hi) {
    double eps_r = dispersion(rho.rho);
    WaveState s{mu_lo, mu_hi, 0.0, {}, {}};
    s.psi.resize(static_cast<std::size_t>(mu_hi - mu_lo) + 1);
    s.vel.resize(s.psi.size());
    for (int mu = mu_lo; mu <= mu_hi; ++mu) {
        cplx f = initial_wavefunction(mu, rho);
        s.psi[static_cast<std::size_t>(mu - mu_lo)] = f;
        s.vel[static_cast<std::size_t>(mu - mu_lo)] = -kI * eps_r * f;
    }
    return s;
}

}  // namespace

WaveState wave_ode_oracle(const LatticeMomentum& rho, double tau_end, int mu_lo, int mu_hi,
                          double dt, const std::vector<int>& probes) {
    check_wave_rho(rho);
    if (mu_lo > mu_hi) throw invalid_input("wave_ode_oracle: empty window");
    double margin = tau_end + 20.0;
    for (int p : probes)
        if (p - mu_lo < margin || mu_hi - p < margin)
            throw invalid_input("wave_ode_oracle: probe site violates light-cone margin");
    WaveState s = wave_shutter_state(rho, mu_lo, mu_hi);
    cplx ghost_lo = std::polar(1.0, rho.rho * (mu_lo - 1));
    cplx ghost_hi = (mu_hi + 1 <= 0) ? std::polar(1.0, rho.rho * (mu_hi + 1)) : cplx{0.0, 0.0};
    return wave_evolve(s, WaveBoundary::frozen, ghost_lo, ghost_hi, tau_end, dt);
}

std::vector<double> wave_site_series(const LatticeMomentum& rho, int mu, double tau_max,
                                     double sample_dt, double dt) {
    check_wave_rho(rho);
    if (!(sample_dt > 0.0) || !(tau_max > 0.0)) throw invalid_input("wave_site_series: bad grid");
    int margin = static_cast<int>(std::ceil(tau_max)) + 21;
    WaveState s = wave_shutter_state(rho, mu - margin, mu + margin);
    cplx ghost_lo = std::polar(1.0, rho.rho * (mu - margin - 1));
    cplx ghost_hi = (mu + margin + 1 <= 0) ? std::polar(1.0, rho.rho * (mu + margin + 1)) : cplx{0.0, 0.0};
    std::vector<double> out;
    out.push_back(std::norm(s.at(mu)));
    long nsamp = static_cast<long>(std::floor(tau_max / sample_dt + 1e-9));
    double next = sample_dt;
    for (long k = 1; k <= nsamp; ++k) {
        s = wave_evolve(s, WaveBoundary::frozen, ghost_lo, ghost_hi, next, dt);
        out.push_back(std::norm(s.at(mu)));
        next += sample_dt;
    }
    return out;
}

NoDitReport no_dit_check(int mu, const LatticeMomentum& rho, double tau_max) {
    check_wave_rho(rho);
    const double sample_dt = 0.05;
    std::vector<double> d = wave_site_series(rho, mu, tau_max, sample_dt);
    NoDitReport rep{};
    rep.expected_period = 2.0 * kPi / dispersion(rho.rho);

    // dominant period from upward mean-crossings over the settled part
    std::size_t i0 = d.size() / 4;
    double mean = 0.0;
    for (std::size_t i = i0; i < d.size(); ++i) mean += d[i];
    mean /= static_cast<double>(d.size() - i0);
    std::vector<double> ups;
    for (std::size_t i = i0 + 1; i < d.size(); ++i)
        if (d[i - 1] < mean && d[i] >= mean)
            ups.push_back(sample_dt * static_cast<double>(i));
    if (ups.size() < 3) throw numerical_error("no_dit_check: too few oscillations to fit a period");
    rep.dominant_period = (ups.back() - ups.front()) / static_cast<double>(ups.size() - 1);

    // longest monotone-rise stretch of the raw density over the settled part
    // (the arrival transient around tau ~ mu is excluded, as for the period)
    double longest = 0.0;
    std::size_t run_start = i0;
    for (std::size_t i = i0 + 1; i < d.size(); ++i) {
        if (d[i] <= d[i - 1]) run_start = i;
        longest = std::max(longest, sample_dt * static_cast<double>(i - run_start));
    }
    rep.longest_monotone_run = longest;

    // comparator: the polymer Schroedinger profile at the same point shows DIT
    std::vector<double> grid;
    for (double tau = 0.0; tau <= tau_max; tau += 0.1) grid.push_back(tau);
    Profile prof = profile_time(mu, rho, grid);
    try {
        CrossingReport cr = crossings(smooth_profile(prof, kPi), 1.0);
        rep.schrodinger_crossings_ok = true;
        rep.schrodinger_width = cr.width;
    } catch (const numerical_error&) {
        rep.schrodinger_crossings_ok = false;
        rep.schrodinger_width = 0.0;
    }
    return rep;
}

}  // namespace polydit
