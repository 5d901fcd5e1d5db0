#include "polydit/units.hpp"

#include <cmath>

namespace polydit {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw invalid_input(std::string("non-finite ") + what);
}
}  // namespace

UnitMap::UnitMap(double lambda_, double mass_, double hbar_)
    : lambda(lambda_), mass(mass_), hbar(hbar_) {
    if (!(lambda > 0.0) || !(mass > 0.0) || !(hbar > 0.0))
        throw invalid_input("UnitMap parameters must be positive");
    require_finite(lambda, "lambda");
    require_finite(mass, "mass");
    require_finite(hbar, "hbar");
}

Dimensionless to_dimensionless(const Physical& q, const UnitMap& u) {
    require_finite(q.x, "x");
    require_finite(q.p, "p");
    require_finite(q.E, "E");
    require_finite(q.t, "t");
    return {q.x / u.lambda, q.p * u.lambda / u.hbar,
            u.mass * u.lambda * u.lambda * q.E / (u.hbar * u.hbar),
            u.hbar * q.t / (u.mass * u.lambda * u.lambda)};
}

Physical to_physical(const Dimensionless& q, const UnitMap& u) {
    require_finite(q.mu, "mu");
    require_finite(q.rho, "rho");
    require_finite(q.epsilon, "epsilon");
    require_finite(q.tau, "tau");
    return {q.mu * u.lambda, q.rho * u.hbar / u.lambda,
            q.epsilon * u.hbar * u.hbar / (u.mass * u.lambda * u.lambda),
            q.tau * u.mass * u.lambda * u.lambda / u.hbar};
}

LatticeMomentum::LatticeMomentum(double rho_) : rho(rho_) {
    if (!std::isfinite(rho_) || rho_ < 0.0 || rho_ >= kPi)
        throw invalid_input("rho must lie in [0, pi)");
}

LatticeMomentum LatticeMomentum::from_physical(double p, const UnitMap& u) {
    require_finite(p, "p");
    if (p < 0.0) throw invalid_input("physical momentum must be non-negative");
    double rho = std::fmod(p * u.lambda / u.hbar, kPi);
    return LatticeMomentum(rho);
}

double LatticeMomentum::epsilon() const {
    double s = std::sin(rho);
    return s * s;
}

double heaviside(double y) { return y >= 0.0 ? 1.0 : 0.0; }

cplx initial_wavefunction(int mu, const LatticeMomentum& rho) {
    if (mu > 0) return {0.0, 0.0};
    return std::polar(1.0, rho.rho * mu);
}

}  // namespace polydit
