#include "polydit/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace polydit {

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};

}  // namespace

double bessel_tail_cutoff(double x) { return x + 10.0 * std::cbrt(x) + 30.0; }

BesselRow bessel_j_row(int n_min, int n_max, double x, double tol) {
    if (n_min > n_max) throw invalid_input("bessel_j_row: n_min > n_max");
    if (!std::isfinite(x) || x < 0.0) throw invalid_input("bessel_j_row: bad argument");
    if (!(tol > 0.0) || tol > 1e-6) throw invalid_input("bessel_j_row: tol out of (0, 1e-6]");

    BesselRow row{n_min, n_max, x, {}};
    row.values.resize(static_cast<std::size_t>(n_max - n_min) + 1);

    if (x == 0.0) {
        for (int n = n_min; n <= n_max; ++n)
            row.values[static_cast<std::size_t>(n - n_min)] = (n == 0) ? 1.0 : 0.0;
        return row;
    }

    const int nabs = std::max({std::abs(n_min), std::abs(n_max), 0});
    // start well beyond both the largest requested order and the turning point
    int start = nabs + static_cast<int>(10.0 * std::cbrt(static_cast<double>(nabs) + 1.0)) + 40;
    start = std::max(start, static_cast<int>(bessel_tail_cutoff(x)) + 20);
    if (start % 2) ++start;

    std::vector<double> f(static_cast<std::size_t>(start) + 2, 0.0);
    f[static_cast<std::size_t>(start) + 1] = 0.0;
    f[static_cast<std::size_t>(start)] = 1e-300;
    double norm = 0.0;  // J_0 + 2*sum_{even n>0} J_n = 1
    for (int n = start; n >= 1; --n) {
        f[static_cast<std::size_t>(n - 1)] =
            (2.0 * n / x) * f[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(n + 1)];
        if (std::abs(f[static_cast<std::size_t>(n - 1)]) > 1e250) {
            for (int k = n - 1; k <= start + 1; ++k) f[static_cast<std::size_t>(k)] *= 1e-250;
            norm *= 1e-250;
        }
        if (n - 1 > 0 && (n - 1) % 2 == 0) norm += 2.0 * f[static_cast<std::size_t>(n - 1)];
    }
    norm += f[0];
    if (norm == 0.0 || !std::isfinite(norm)) throw numerical_error("bessel_j_row: normalization failed");

    for (int n = n_min; n <= n_max; ++n) {
        int a = std::abs(n);
        double v = f[static_cast<std::size_t>(a)] / norm;
        if (n < 0 && (a % 2)) v = -v;
        row.values[static_cast<std::size_t>(n - n_min)] = v;
    }
    return row;
}

double bessel_j(int n, double x) { return bessel_j_row(n, n, x).at(n); }

namespace {

// E(x) = int_0^x e^{i pi u^2/2} du; C = Re, S = Im.
cplx fresnel_series(double x) {
    // E = sum_k (i a)^k x^{2k+1} / (k! (2k+1)), a = pi/2
    const cplx iax2 = kI * (kPi / 2.0) * x * x;
    cplx term{x, 0.0};
    cplx sum = term;
    for (int k = 1; k < 80; ++k) {
        term *= iax2 / static_cast<double>(k);
        cplx add = term / static_cast<double>(2 * k + 1);
        sum += add;
        if (std::abs(add) < 1e-18) break;
    }
    return sum;
}

// 20-point Gauss-Legendre nodes/weights (positive half).
const double kGLx[10] = {0.0765265211334973, 0.2277858511416451, 0.3737060887154196,
                         0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
                         0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
                         0.9931285991850949};
const double kGLw[10] = {0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
                         0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
                         0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
                         0.0176140071391521};

cplx fresnel_panels(double a, double b) {
    // integrate e^{i pi u^2 / 2} over [a, b] with fixed-order panels
    int npan = std::max(1, static_cast<int>(std::ceil((b - a) / 0.5)));
    cplx acc{0.0, 0.0};
    for (int p = 0; p < npan; ++p) {
        double lo = a + (b - a) * p / npan;
        double hi = a + (b - a) * (p + 1) / npan;
        double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        for (int j = 0; j < 10; ++j) {
            for (int s = -1; s <= 1; s += 2) {
                double u = c + s * h * kGLx[j];
                acc += h * kGLw[j] * std::exp(kI * (kPi / 2.0) * u * u);
            }
        }
    }
    return acc;
}

cplx fresnel_asymptotic(double x) {
    // E(x) = (1+i)/2 + e^{i pi x^2/2} sum_k (2k-1)!! / ((i pi)^{k+1} x^{2k+1})
    cplx sum{0.0, 0.0};
    cplx term = 1.0 / (kI * kPi * x);
    double prev = std::abs(term);
    for (int k = 0; k < 60; ++k) {
        sum += term;
        term *= static_cast<double>(2 * k + 1) / (kI * kPi * x * x);
        double mag = std::abs(term);
        if (mag < 1e-18 || mag > prev) break;  // smallest-term rule
        prev = mag;
    }
    return cplx{0.5, 0.5} + std::exp(kI * (kPi / 2.0) * x * x) * sum;
}

}  // namespace

FresnelCS fresnel(double xi) {
    if (!std::isfinite(xi)) throw invalid_input("fresnel: non-finite argument");
    double x = std::abs(xi);
    cplx E;
    if (x <= 1.8) {
        E = fresnel_series(x);
    } else if (x < 4.5) {
        E = fresnel_series(1.8) + fresnel_panels(1.8, x);
    } else {
        E = fresnel_asymptotic(x);
    }
    double sgn = xi < 0.0 ? -1.0 : 1.0;
    return {sgn * E.real(), sgn * E.imag()};
}

cplx lerch_unit(double theta, double a) {
    if (!std::isfinite(theta) || !std::isfinite(a)) throw invalid_input("lerch_unit: non-finite input");
    double th = std::remainder(theta, 2.0 * kPi);
    if (std::abs(th) < 1e-9) throw invalid_input("lerch_unit: theta == 0 mod 2pi (divergent)");
    double ar = std::round(a);
    if (ar <= 0.0 && std::abs(a - ar) < 1e-12) throw invalid_input("lerch_unit: a at a pole");

    const cplx z = std::exp(kI * th);
    const cplx w = 1.0 / (1.0 - z);
    // partial-sum length must grow as the singularity z -> 1 is approached
    double need = 48.0 * std::abs(w);
    long M = std::max<long>(64, static_cast<long>(std::ceil(need)));
    M = std::max<long>(M, static_cast<long>(std::ceil(-a)) + 8);
    if (M > 20000000L) throw numerical_error("lerch_unit: theta too close to 0 mod 2pi");

    cplx sum{0.0, 0.0};
    cplx zk{1.0, 0.0};
    for (long k = 0; k < M; ++k) {
        sum += zk / (a + static_cast<double>(k));
        zk *= z;
        if ((k & 1023) == 1023) zk /= std::abs(zk);  // keep |z^k| from drifting
    }
    // tail sum_{k>=M} z^k/(a+k) by iterated summation by parts
    cplx term = zk * w / (a + static_cast<double>(M));
    double prev = std::abs(term);
    for (int n = 1; n < 60; ++n) {
        sum += term;
        term *= z * w * (-static_cast<double>(n) / (a + static_cast<double>(M) + n));
        double mag = std::abs(term);
        if (mag < 1e-17 * std::abs(sum) || mag > prev) break;
        prev = mag;
    }
    return sum;
}

cplx gauss_2f1_unit(double b, double theta) {
    if (b == 0.0) throw invalid_input("gauss_2f1_unit: b == 0");
    return b * lerch_unit(theta, b);
}

cplx incomplete_beta_unit(double theta, double a) {
    double th = std::remainder(theta, 2.0 * kPi);
    return std::exp(kI * (a * th)) * lerch_unit(th, a);
}

cplx gauss_theta_sum(double tau, double damping) {
    if (!(tau > 0.0)) throw invalid_input("gauss_theta_sum: tau must be positive");
    if (!(damping > 0.0)) throw invalid_input("gauss_theta_sum: damping must be positive");
    long nmax = static_cast<long>(std::ceil(std::sqrt(32.3 / damping))) + 1;  // e^{-d n^2} < 1e-14
    cplx sum{1.0, 0.0};
    for (long nu = 1; nu <= nmax; ++nu) {
        double n2 = static_cast<double>(nu) * static_cast<double>(nu);
        sum += 2.0 * std::exp(kI * (n2 / (2.0 * tau))) * std::exp(-damping * n2);
    }
    return sum;
}

AsymptoticTerms bessel_pq(double nu, double tau) {
    if (!(tau > 0.0)) throw invalid_input("bessel_pq: tau must be positive");
    double P = 0.0, Q = 0.0;
    double t = 1.0;  // a_k / tau^k with alternating signs folded in below
    double prev = 1.0, smallest = 1.0;
    for (int k = 0; k < 80; ++k) {
        if (k % 2 == 0)
            P += ((k / 2) % 2 ? -1.0 : 1.0) * t;
        else
            Q += (((k - 1) / 2) % 2 ? -1.0 : 1.0) * t;
        double mu4 = 4.0 * nu * nu;
        double next = t * (mu4 - (2.0 * k + 1.0) * (2.0 * k + 1.0)) / (8.0 * (k + 1.0) * tau);
        if (std::abs(next) >= std::abs(prev) && k > 0) break;  // smallest-term rule
        prev = t = next;
        smallest = std::min(smallest, std::abs(t));
    }
    return {P, Q, smallest > 1e-6};
}

}  // namespace polydit
