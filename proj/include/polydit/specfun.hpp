#pragma once

#include "polydit/types.hpp"

namespace polydit {

// J_{n_min}..J_{n_max}(x) in one batch; Miller downward recurrence with
// sum normalization, negative orders by J_{-n} = (-1)^n J_n.
struct BesselRow {
    int order_min, order_max;
    double argument;
    std::vector<double> values;  // index i <-> order order_min + i

    double at(int n) const {
        if (n < order_min || n > order_max) throw invalid_input("order outside row");
        return values[static_cast<std::size_t>(n - order_min)];
    }
};

BesselRow bessel_j_row(int n_min, int n_max, double x, double tol = 1e-12);

// Single-order convenience wrapper.
double bessel_j(int n, double x);

// Order beyond which |J_n(x)| decays super-exponentially; sums over Bessel
// rows are truncated at n > bessel_tail_cutoff(x).
double bessel_tail_cutoff(double x);

struct FresnelCS {
    double C, S;
};

// C(xi) = int_0^xi cos(pi u^2/2) du, S likewise with sin; abs error <= 1e-10.
FresnelCS fresnel(double xi);

// Phi(e^{i theta}, 1, a) = sum_{k>=0} e^{i k theta}/(a+k), conditionally
// convergent for theta != 0 mod 2pi; accelerated by iterated summation by
// parts of the tail. Relative error <= 1e-8.
cplx lerch_unit(double theta, double a);

// 2F1(1, b; 1+b; e^{i theta}) = b * Phi(e^{i theta}, 1, b).
cplx gauss_2f1_unit(double b, double theta);

// B(e^{i theta}; a, 0) = e^{i a theta} * Phi(e^{i theta}, 1, a).
cplx incomplete_beta_unit(double theta, double a);

// sum_{nu in Z} e^{i nu^2/(2 tau)} e^{-damping nu^2}, truncated below 1e-14.
cplx gauss_theta_sum(double tau, double damping);

// Hankel asymptotic series for J_nu(tau) ~ sqrt(2/(pi tau)) [P cos w - Q sin w],
// w = tau - nu pi/2 - pi/4; truncated at the smallest term.
struct AsymptoticTerms {
    double P, Q;
    bool degraded;  // smallest term exceeded 1e-6

    cplx R() const { return {P, Q}; }
};

AsymptoticTerms bessel_pq(double nu, double tau);

}  // namespace polydit
