#pragma once

#include <functional>

#include "polydit/types.hpp"
#include "polydit/units.hpp"

namespace polydit {

// (C(xi), S(xi), xi) samples.
SpiralCurve cornu_curve(double xi_min, double xi_max, double step);

// (Re Phi, Im Phi, tau) samples; squared radius equals the polymer density.
SpiralCurve like_spiral(int mu, const LatticeMomentum& rho, double tau_max, double step,
                        bool parallel = true);

// Moving-average smoothing (used to remove the fast e^{-2 i tau} beat from
// polymer time profiles before crossing detection; one beat period is pi).
Profile smooth_profile(const Profile& p, double window);

// First two crossings of (density - level) after the density first exceeds
// the arrival threshold; linear interpolation between profile samples.
// Throws numerical_error with fewer than two crossings (no-DIT regime).
CrossingReport crossings(const Profile& profile, double level, double arrival_threshold = 1e-3);

// Function-backed variant: coarse scan + bisection refined to 1e-6.
CrossingReport crossings_fn(const std::function<double(double)>& density, double lo, double hi,
                            double coarse_step, double level, double arrival_threshold = 1e-3);

// xi parameters of the first two intersections of the Cornu spiral with the
// circle of radius sqrt(2) centered at (-1/2, -1/2).
std::pair<double, double> cornu_circle_intersections();

// Arc length along the Cornu spiral between those two intersections.
double cornu_circle_width();

// Chord-sum arc length over the stored samples of a curve.
double arc_length(const SpiralCurve& curve, double param_a, double param_b);

// Arc lengths recomputed with step halving until stable to 1e-6.
double cornu_arc_length(double a, double b);
double like_spiral_arc_length(int mu, const LatticeMomentum& rho, double a, double b);

}  // namespace polydit
