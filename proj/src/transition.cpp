#include "polydit/transition.hpp"

#include <cmath>

#include "polydit/moshinsky.hpp"
#include "polydit/shutter.hpp"
#include "polydit/specfun.hpp"

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
}  // namespace

cplx asymptotic_bessel(int nu, double tau) {
    if (!(tau > 0.0)) throw invalid_input("asymptotic_bessel: tau must be positive");
    double ph = static_cast<double>(nu) * static_cast<double>(nu) / (2.0 * tau);
    cplx pref = std::polar(1.0, -kPi / 4.0) / std::sqrt(2.0 * kPi * tau);
    double sgn = (nu % 2) ? -1.0 : 1.0;
    return pref * (std::exp(kI * ph) + kI * sgn * std::exp(-kI * (ph + 2.0 * tau)));
}

cplx discrete_moshinsky_prefactor(int mu, const LatticeMomentum& rho, double tau) {
    if (!(tau > 0.0)) throw invalid_input("discrete_moshinsky: tau must be positive");
    return std::polar(1.0, rho.rho * mu - 0.5 * rho.rho * rho.rho * tau) *
           std::polar(1.0, -kPi / 4.0) / std::sqrt(2.0 * kPi * tau);
}

namespace {

// Hann taper suppressing the spurious Gauss-sum images at nu = 2 pi k tau.
double image_taper(double absnu, double tau) {
    if (absnu <= 4.0 * tau) return 1.0;
    if (absnu >= 5.0 * tau) return 0.0;
    return 0.5 * (1.0 + std::cos(kPi * (absnu - 4.0 * tau) / tau));
}

}  // namespace

cplx discrete_moshinsky_any(int mu, double rho, double tau, double eta) {
    if (!(tau > 0.0)) throw invalid_input("discrete_moshinsky: tau must be positive");
    cplx pref = std::polar(1.0, rho * mu - 0.5 * rho * rho * tau) *
                std::polar(1.0, -kPi / 4.0) / std::sqrt(2.0 * kPi * tau);
    if (eta < 0.0) throw invalid_input("discrete_moshinsky: eta < 0");
    if (eta == 0.0) eta = 1e-6 / tau;
    long K = static_cast<long>(std::floor(rho * tau - mu));
    // cutoff where either the damping or the image taper has killed the terms
    long L = -static_cast<long>(std::ceil(std::min(5.0 * tau + 1.0, std::sqrt(27.7 / eta)))) - 1;
    cplx sum{0.0, 0.0};
    for (long nu = K; nu >= L; --nu) {
        double n2 = static_cast<double>(nu) * static_cast<double>(nu);
        double w = std::exp(-eta * n2) * image_taper(std::abs(static_cast<double>(nu)), tau);
        if (w == 0.0 && nu < 0) continue;
        sum += w * std::exp(kI * (n2 / (2.0 * tau)));
    }
    return pref * sum;
}

cplx discrete_moshinsky(int mu, const LatticeMomentum& rho, double tau, double eta) {
    return discrete_moshinsky_any(mu, rho.rho, tau, eta);
}

namespace {

// J_nu(tau) for real order, negative order via the reflection formula.
double real_order_bessel_j(double nu, double x) {
    if (nu >= 0.0) return std::cyl_bessel_j(nu, x);
    double a = -nu;
    return std::cos(a * kPi) * std::cyl_bessel_j(a, x) - std::sin(a * kPi) * std::cyl_neumann(a, x);
}

}  // namespace

cplx euler_maclaurin_phi(int mu, const LatticeMomentum& rho, double tau) {
    if (!(tau > 0.0)) throw invalid_input("euler_maclaurin_phi: tau must be positive");
    double alpha = rho.rho + kPi / 2.0;
    double cbrt_tau = std::cbrt(tau);
    double L = -(tau + 2.0 * cbrt_tau);       // deep-tail cutoff before Y_nu blowup
    double ramp = 5.0 * cbrt_tau;             // Hann ramp width at the cutoff
    double hi = static_cast<double>(-mu);
    if (hi <= L) return {0.0, 0.0};
    auto f = [&](double nu) {
        double w = 1.0;
        if (nu < L + ramp) w = 0.5 * (1.0 - std::cos(kPi * (nu - L) / ramp));
        return w * real_order_bessel_j(nu, tau) * std::exp(kI * (alpha * nu));
    };
    int npan = std::max(4, static_cast<int>(std::ceil((hi - L) / 0.5)));
    cplx integral{0.0, 0.0};
    for (int p = 0; p < npan; ++p) {
        double lo = L + (hi - L) * p / npan;
        double up = L + (hi - L) * (p + 1) / npan;
        double c = 0.5 * (lo + up), h = 0.5 * (up - lo);
        for (int j = 0; j < 10; ++j) {
            integral += h * kGLw[j] * (f(c + h * kGLx[j]) + f(c - h * kGLx[j]));
        }
    }
    if (!std::isfinite(integral.real()) || !std::isfinite(integral.imag()))
        throw numerical_error("euler_maclaurin_phi: quadrature failed");
    cplx boundary = 0.5 * bessel_j(-mu, tau) * std::exp(-kI * (alpha * mu));
    return integral + boundary;
}

TransitionReport asymptotic_moshinsky(int mu, const LatticeMomentum& rho, double tau) {
    if (!(tau > 0.0)) throw invalid_input("asymptotic_moshinsky: tau must be positive");
    TransitionReport r;
    r.main_term = moshinsky(static_cast<double>(mu), rho.rho, tau);
    r.correction = std::exp(-kI * (kPi / 4.0 + static_cast<double>(mu) * mu / (2.0 * tau))) /
                   std::sqrt(8.0 * kPi * tau);
    r.exact = psi(mu, rho, tau);
    r.residual_P = std::norm(r.exact) - std::norm(r.main_term);
    return r;
}

ResidualPeak residual_max(int mu, const LatticeMomentum& rho, double tau_lo, double tau_hi,
                          double grid_step, ResidualMode mode) {
    if (!(tau_lo > 0.0) || !(tau_hi > tau_lo) || !(grid_step > 0.0))
        throw invalid_input("residual_max: bad range");
    auto P = [&](double tau) {
        if (mode == ResidualMode::exact) {
            return density(mu, rho, tau) - moshinsky_density(fresnel_arg(mu, rho.rho, tau));
        }
        TransitionReport r = asymptotic_moshinsky(mu, rho, tau);
        return std::norm(r.main_term + r.correction) - std::norm(r.main_term);
    };
    const long n = static_cast<long>(std::floor((tau_hi - tau_lo) / grid_step)) + 1;
    std::vector<double> vals(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i)
        vals[static_cast<std::size_t>(i)] = P(tau_lo + grid_step * static_cast<double>(i));
    long best = 0;
    for (long i = 1; i < n; ++i)
        if (std::abs(vals[static_cast<std::size_t>(i)]) > std::abs(vals[static_cast<std::size_t>(best)])) best = i;
    double t_best = tau_lo + grid_step * static_cast<double>(best);
    double a = std::max(tau_lo, t_best - grid_step);
    double b = std::min(tau_hi, t_best + grid_step);
    // golden-section refinement of |P| on [a, b]
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = std::abs(P(x1)), f2 = std::abs(P(x2));
    for (int it = 0; it < 80 && (b - a) > 1e-10; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = std::abs(P(x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = std::abs(P(x1));
        }
    }
    double t_star = 0.5 * (a + b);
    double p_star = P(t_star);
    if (std::abs(p_star) < std::abs(vals[static_cast<std::size_t>(best)])) {
        t_star = t_best;
        p_star = vals[static_cast<std::size_t>(best)];
    }
    return {t_star, std::abs(p_star), p_star >= 0.0 ? 1 : -1};
}

}  // namespace polydit
