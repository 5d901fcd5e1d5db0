#include "polydit/spiral.hpp"

#include <cmath>

#include "polydit/shutter.hpp"
#include "polydit/specfun.hpp"

namespace polydit {

namespace {
constexpr double kSqrt2 = 1.41421356237309504880;
}

SpiralCurve cornu_curve(double xi_min, double xi_max, double step) {
    if (!(step > 0.0) || !(xi_max > xi_min)) throw invalid_input("cornu_curve: bad range");
    SpiralCurve c{SpiralKind::cornu, {}};
    long n = static_cast<long>(std::floor((xi_max - xi_min) / step + 1e-9)) + 1;
    c.points.resize(static_cast<std::size_t>(n));
#pragma omp parallel for
    for (long i = 0; i < n; ++i) {
        double xi = xi_min + step * static_cast<double>(i);
        FresnelCS cs = fresnel(xi);
        c.points[static_cast<std::size_t>(i)] = {cs.C, cs.S, xi};
    }
    return c;
}

SpiralCurve like_spiral(int mu, const LatticeMomentum& rho, double tau_max, double step,
                        bool parallel) {
    if (!(step > 0.0) || !(tau_max > 0.0)) throw invalid_input("like_spiral: bad range");
    SpiralCurve c{SpiralKind::polymer_like, {}};
    long n = static_cast<long>(std::floor(tau_max / step + 1e-9)) + 1;
    c.points.resize(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long i = 0; i < n; ++i) {
        double tau = step * static_cast<double>(i);
        cplx f = phi(mu, rho, tau);
        c.points[static_cast<std::size_t>(i)] = {f.real(), f.imag(), tau};
    }
    return c;
}

Profile smooth_profile(const Profile& p, double window) {
    if (!(window > 0.0)) throw invalid_input("smooth_profile: window must be positive");
    Profile out = p;
    const std::size_t n = p.coordinate.size();
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double c = p.coordinate[i];
        while (lo < n && p.coordinate[lo] < c - 0.5 * window) ++lo;
        if (hi < lo) hi = lo;
        while (hi + 1 < n && p.coordinate[hi + 1] <= c + 0.5 * window) ++hi;
        double acc = 0.0;
        for (std::size_t k = lo; k <= hi; ++k) acc += p.density[k];
        out.density[i] = acc / static_cast<double>(hi - lo + 1);
    }
    return out;
}

namespace {

CrossingReport crossings_impl(const std::vector<double>& x, const std::vector<double>& d,
                              double level, double arrival_threshold,
                              const std::function<double(double)>* refine) {
    const std::size_t n = x.size();
    std::size_t start = 0;
    while (start < n && d[start] <= arrival_threshold) ++start;
    if (start > 0) --start;  // keep the sample just before arrival
    std::vector<double> found;
    for (std::size_t i = start; i + 1 < n && found.size() < 2; ++i) {
        double a = d[i] - level, b = d[i + 1] - level;
        if (a == 0.0) {
            found.push_back(x[i]);
            continue;
        }
        if (a * b < 0.0) {
            double lo = x[i], hi = x[i + 1];
            if (refine) {
                double flo = (*refine)(lo) - level;
                for (int it = 0; it < 80 && hi - lo > 1e-7; ++it) {
                    double mid = 0.5 * (lo + hi);
                    double fm = (*refine)(mid) - level;
                    if (fm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if (flo * fm < 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                found.push_back(0.5 * (lo + hi));
            } else {
                found.push_back(lo + (hi - lo) * (-a) / (b - a));  // linear interpolation
            }
        }
    }
    if (found.size() < 2)
        throw numerical_error("crossings: fewer than two level crossings (no DIT signature)");
    return {found[0], found[1], found[1] - found[0], level};
}

}  // namespace

CrossingReport crossings(const Profile& profile, double level, double arrival_threshold) {
    if (profile.coordinate.size() < 3) throw invalid_input("crossings: profile too short");
    return crossings_impl(profile.coordinate, profile.density, level, arrival_threshold, nullptr);
}

CrossingReport crossings_fn(const std::function<double(double)>& density, double lo, double hi,
                            double coarse_step, double level, double arrival_threshold) {
    if (!(coarse_step > 0.0) || !(hi > lo)) throw invalid_input("crossings_fn: bad range");
    std::vector<double> xs, ds;
    for (double x = lo; x <= hi + 1e-12; x += coarse_step) {
        xs.push_back(x);
        ds.push_back(density(x));
    }
    return crossings_impl(xs, ds, level, arrival_threshold, &density);
}

std::pair<double, double> cornu_circle_intersections() {
    auto dist = [](double xi) {
        FresnelCS cs = fresnel(xi);
        double dx = cs.C + 0.5, dy = cs.S + 0.5;
        return std::sqrt(dx * dx + dy * dy) - kSqrt2;
    };
    std::vector<double> found;
    double prev = dist(0.0);
    for (double xi = 0.01; xi <= 6.0 && found.size() < 2; xi += 0.01) {
        double cur = dist(xi);
        if (prev * cur < 0.0) {
            double lo = xi - 0.01, hi = xi, flo = prev;
            for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
                double mid = 0.5 * (lo + hi), fm = dist(mid);
                if (flo * fm <= 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            found.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    if (found.size() < 2) throw numerical_error("cornu_circle_intersections: intersections not found");
    return {found[0], found[1]};
}

double cornu_circle_width() {
    auto [xi1, xi2] = cornu_circle_intersections();
    return cornu_arc_length(xi1, xi2);
}

double arc_length(const SpiralCurve& curve, double param_a, double param_b) {
    if (!(param_b >= param_a)) throw invalid_input("arc_length: param_b < param_a");
    double len = 0.0;
    const auto& pts = curve.points;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double p0 = pts[i].param, p1 = pts[i + 1].param;
        if (p1 <= param_a || p0 >= param_b) continue;
        // clip the segment to [param_a, param_b] by linear interpolation
        double t0 = std::max(p0, param_a), t1 = std::min(p1, param_b);
        double f0 = (t0 - p0) / (p1 - p0), f1 = (t1 - p0) / (p1 - p0);
        double x0 = pts[i].x + f0 * (pts[i + 1].x - pts[i].x);
        double y0 = pts[i].y + f0 * (pts[i + 1].y - pts[i].y);
        double x1 = pts[i].x + f1 * (pts[i + 1].x - pts[i].x);
        double y1 = pts[i].y + f1 * (pts[i + 1].y - pts[i].y);
        len += std::hypot(x1 - x0, y1 - y0);
    }
    return len;
}

namespace {

double adaptive_arc_length(const std::function<std::pair<double, double>(double)>& f, double a,
                           double b) {
    double prev = 0.0;
    for (int halving = 0; halving < 16; ++halving) {
        long n = 64L << halving;
        double len = 0.0;
        auto [px, py] = f(a);
        for (long i = 1; i <= n; ++i) {
            double t = a + (b - a) * static_cast<double>(i) / static_cast<double>(n);
            auto [x, y] = f(t);
            len += std::hypot(x - px, y - py);
            px = x;
            py = y;
        }
        if (halving > 0 && std::abs(len - prev) < 1e-6) return len;
        prev = len;
    }
    throw numerical_error("arc_length: step halving did not stabilize");
}

}  // namespace

double cornu_arc_length(double a, double b) {
    return adaptive_arc_length(
        [](double xi) {
            FresnelCS cs = fresnel(xi);
            return std::pair<double, double>{cs.C, cs.S};
        },
        a, b);
}

double like_spiral_arc_length(int mu, const LatticeMomentum& rho, double a, double b) {
    return adaptive_arc_length(
        [&](double tau) {
            cplx f = phi(mu, rho, tau);
            return std::pair<double, double>{f.real(), f.imag()};
        },
        a, b);
}

}  // namespace polydit
