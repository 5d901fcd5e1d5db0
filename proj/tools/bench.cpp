#include <chrono>
#include <cstdio>

#include "polydit/moshinsky.hpp"
#include "polydit/shutter.hpp"
#include "polydit/spiral.hpp"
#include "polydit/units.hpp"

using namespace polydit;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
    // one warmup, then best of reps
    f();
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

volatile double sink;

}  // namespace

int main() {
    LatticeMomentum rho(0.3);
    std::vector<double> grid;
    for (double t = 0.0; t <= 400.0; t += 0.1) grid.push_back(t);

    std::printf("%-34s %12s %12s %8s\n", "kernel", "serial[ms]", "openmp[ms]", "speedup");

    {
        double ts = time_ms([&] { sink = profile_time(10, rho, grid, false).density.back(); }, 3);
        double tp = time_ms([&] { sink = profile_time(10, rho, grid, true).density.back(); }, 3);
        std::printf("%-34s %12.1f %12.1f %8.2f\n", "time profile (4001 pts, tau<=400)", ts, tp,
                    ts / tp);
    }
    {
        double ts = time_ms([&] { sink = profile_space(250.0, rho, -300, 300, false).density[5]; }, 5);
        double tp = time_ms([&] { sink = profile_space(250.0, rho, -300, 300, true).density[5]; }, 5);
        std::printf("%-34s %12.3f %12.3f %8.2f\n", "space profile (601 sites, tau=250)", ts, tp,
                    ts / tp);
    }
    {
        double ts = time_ms([&] { sink = like_spiral(10, rho, 200.0, 0.05, false).points.back().x; }, 3);
        double tp = time_ms([&] { sink = like_spiral(10, rho, 200.0, 0.05, true).points.back().x; }, 3);
        std::printf("%-34s %12.1f %12.1f %8.2f\n", "like-spiral (4001 pts)", ts, tp, ts / tp);
    }
    {
        std::vector<double> mg;
        for (double t = 1.0; t <= 400.0; t += 0.1) mg.push_back(t);
        double ts = time_ms([&] { sink = moshinsky_profile_time(10, 0.3, mg, false).density.back(); }, 5);
        double tp = time_ms([&] { sink = moshinsky_profile_time(10, 0.3, mg, true).density.back(); }, 5);
        std::printf("%-34s %12.3f %12.3f %8.2f\n", "Moshinsky profile (3991 pts)", ts, tp, ts / tp);
    }
    return 0;
}
