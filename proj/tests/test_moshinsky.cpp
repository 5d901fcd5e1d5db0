#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "polydit/moshinsky.hpp"
#include "polydit/specfun.hpp"

using namespace polydit;

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI{0.0, 1.0};
}  // namespace

TEST_CASE("density at the classical arrival point is exactly 1/4") {
    CHECK(std::abs(moshinsky_density(0.0) - 0.25) < 1e-10);
    // through the full Moshinsky function as well: xi = 0 at tau = mu/rho
    double mu = 10.0, rho = 2.5, tau = 4.0;
    CHECK(std::abs(std::norm(moshinsky(mu, rho, tau)) - 0.25) < 1e-10);
}

TEST_CASE("suppression ahead of the front and ringing behind it") {
    CHECK(moshinsky_density(-6.0) < 2e-3);
    CHECK(moshinsky_density(-6.0) == doctest::Approx(0.00140669018546817).epsilon(1e-9));
    CHECK(std::abs(1.0 - moshinsky_density(6.0)) < 0.1);
    CHECK(moshinsky_density(6.0) == doctest::Approx(0.9478989192779).epsilon(1e-9));
}

TEST_CASE("density is the squared amplitude") {
    for (double tau : {1.0, 20.0, 250.0}) {
        double xi = fresnel_arg(10.0, 0.3, tau);
        CHECK(std::norm(moshinsky(10.0, 0.3, tau)) == doctest::Approx(moshinsky_density(xi)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(moshinsky(1.0, 1.0, 0.0), invalid_input);
    CHECK_THROWS_AS(fresnel_arg(1.0, 1.0, -2.0), invalid_input);
}

TEST_CASE("monotone rise on xi in [-6, 0]") {
    double prev = -1.0;
    for (double xi = -6.0; xi <= 0.0 + 1e-12; xi += 0.01) {
        double d = moshinsky_density(xi);
        CHECK(d > prev);
        prev = d;
    }
}

TEST_CASE("damped oscillation past the front") {
    // successive extrema of |density - 1| decrease
    std::vector<double> extrema;
    double d0 = moshinsky_density(0.0), d1 = moshinsky_density(0.01);
    for (double xi = 0.02; xi <= 14.0 && extrema.size() < 10; xi += 0.01) {
        double d2 = moshinsky_density(xi);
        if ((d1 - d0) * (d2 - d1) < 0.0) extrema.push_back(std::abs(d1 - 1.0));
        d0 = d1;
        d1 = d2;
    }
    REQUIRE(extrema.size() == 10);
    for (std::size_t i = 1; i < extrema.size(); ++i) CHECK(extrema[i] < extrema[i - 1]);
}

TEST_CASE("moshinsky satisfies the free Schroedinger equation") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> umu(2.0, 30.0);
    std::uniform_real_distribution<double> urho(0.2, 2.8);
    std::uniform_real_distribution<double> utau(5.0, 120.0);
    const double h = 1e-3;
    for (int trial = 0; trial < 20; ++trial) {
        double mu = umu(rng), rho = urho(rng), tau = utau(rng);
        cplx dM_dt = (moshinsky(mu, rho, tau + h) - moshinsky(mu, rho, tau - h)) / (2.0 * h);
        cplx d2M_dx2 = (moshinsky(mu + h, rho, tau) - 2.0 * moshinsky(mu, rho, tau) +
                        moshinsky(mu - h, rho, tau)) /
                       (h * h);
        CHECK(std::abs(kI * dM_dt + 0.5 * d2M_dx2) < 1e-4);
    }
}

TEST_CASE("reflectivity variant composition") {
    double mu = 0.0, rho = 0.3, tau = 100.0;
    cplx direct = moshinsky(mu, rho, tau) + std::polar(1.0, kPi * 0.25) * moshinsky(mu, -rho, tau);
    CHECK(with_reflectivity(mu, rho, tau, 0.25) == direct);  // bitwise composition
    // alpha = 0: plain sum
    CHECK(with_reflectivity(mu, rho, tau, 0.0) ==
          moshinsky(mu, rho, tau) + std::polar(1.0, 0.0) * moshinsky(mu, -rho, tau));
    // at mu = 0 the two Fresnel arguments are not symmetric; check numerically
    cplx mp = moshinsky(0.0, rho, tau), mm = moshinsky(0.0, -rho, tau);
    CHECK(std::abs(mp - mm) > 1e-3);  // xi flips sign, so the amplitudes differ
    CHECK_THROWS_AS(with_reflectivity(0.0, 0.3, 0.0, 1.0), invalid_input);
}

TEST_CASE("width formulas") {
    CHECK(time_width(10.0, 0.3) == doctest::Approx(28.994256725150503).epsilon(1e-12));
    CHECK(time_width(10.0, 0.3) == doctest::Approx(29.0).epsilon(0.004));
    CHECK(time_width(40.0, 0.3) == doctest::Approx(2.0 * time_width(10.0, 0.3)).epsilon(1e-12));
    CHECK(space_width(250.0) == doctest::Approx(23.821212669691196).epsilon(1e-12));
    CHECK(space_width(0.0) == 0.0);
    CHECK_THROWS_AS(time_width(-1.0, 0.3), invalid_input);
}

TEST_CASE("measured continuum time width vs Eq. (8), via the xi mapping") {
    // crossings of the continuum profile in tau, mapped to xi where the
    // linearized formula lives: delta_tau = (d tau/d xi)|_cl * delta_xi
    double mu = 10.0, rho = 0.3;
    auto dens = [&](double tau) { return moshinsky_density(fresnel_arg(mu, rho, tau)); };
    // locate first two level-1 crossings by scanning
    std::vector<double> cross;
    double prev = dens(5.0);
    for (double t = 5.05; t <= 200.0 && cross.size() < 2; t += 0.05) {
        double cur = dens(t);
        if ((prev - 1.0) * (cur - 1.0) < 0.0) {
            double lo = t - 0.05, hi = t;
            for (int i = 0; i < 60; ++i) {
                double mid = 0.5 * (lo + hi);
                if ((dens(lo) - 1.0) * (dens(mid) - 1.0) <= 0.0)
                    hi = mid;
                else
                    lo = mid;
            }
            cross.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    REQUIRE(cross.size() == 2);
    double dxi = fresnel_arg(mu, rho, cross[1]) - fresnel_arg(mu, rho, cross[0]);
    double jac = std::sqrt(kPi * mu / (rho * rho * rho));  // d tau/d xi at tau_cl
    CHECK(dxi * jac == doctest::Approx(time_width(mu, rho)).epsilon(0.10));
}

TEST_CASE("measured continuum space width vs Eq. (9)") {
    double tau = 250.0, rho = 0.3;
    auto dens = [&](double mu) { return moshinsky_density(fresnel_arg(mu, rho, tau)); };
    // scan down from the front edge at mu = rho tau
    std::vector<double> cross;
    double prev = dens(95.0);
    for (double m = 94.9; m >= 0.0 && cross.size() < 2; m -= 0.1) {
        double cur = dens(m);
        if ((prev - 1.0) * (cur - 1.0) < 0.0) cross.push_back(m + 0.05);
        prev = cur;
    }
    REQUIRE(cross.size() == 2);
    CHECK(cross[0] - cross[1] == doctest::Approx(space_width(tau)).epsilon(0.10));
}
