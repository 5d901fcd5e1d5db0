#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace polydit {

using cplx = std::complex<double>;

// Thrown for bad arguments / configuration (CLI exit code 2).
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an algorithm fails to reach its accuracy target (CLI exit code 3).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Dynamics { polymer, continuum, classical, wave };

enum class ProfileAxis { time_at_fixed_site, site_at_fixed_time };

struct Profile {
    ProfileAxis axis;
    Dynamics dynamics;
    std::vector<double> coordinate;  // strictly increasing
    std::vector<double> density;     // non-negative
};

enum class SpiralKind { cornu, polymer_like };

struct SpiralPoint {
    double x, y, param;
};

struct SpiralCurve {
    SpiralKind kind;
    std::vector<SpiralPoint> points;  // param strictly increasing
};

struct CrossingReport {
    double first;   // first crossing parameter
    double second;  // second crossing parameter
    double width;   // second - first
    double level;   // density level that was crossed
};

struct PolymerState {
    int mu_lo, mu_hi;  // inclusive window
    double tau;
    std::vector<cplx> amplitudes;  // index i <-> site mu_lo + i

    cplx at(int mu) const {
        if (mu < mu_lo || mu > mu_hi) throw invalid_input("site outside window");
        return amplitudes[static_cast<std::size_t>(mu - mu_lo)];
    }
};

}  // namespace polydit
