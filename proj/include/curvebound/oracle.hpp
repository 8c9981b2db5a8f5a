#pragma once

#include <utility>
#include <vector>

#include "curvebound/sparsepoly.hpp"

namespace curvebound {

// One evaluation sweep around the circle of a fixed radius. Sample points
// are exact rational points ON the circle: the right half comes from the
// tangent half-angle parametrization
//     x = R(1-u^2)/(1+u^2),  y = 2Ru/(1+u^2),   u in [-1, 1),
// and the left half from the antipodes of the same grid, so the sweep
// covers the full circle (including (-R, 0)) in angular order with small
// exact denominators.
struct CircleProbe {
    Rat radius;
    int samples = 0;                           // actual count, always even
    std::vector<int> signs;                    // -1/0/+1 per sample, angular order
    std::vector<std::pair<int, int>> sign_changes;  // adjacent pairs, wrap included
    std::vector<int> contacts;                 // sample indices where p == 0 exactly
    bool all_zero = false;                     // every sample lies on the curve
};

// Exact point of sample `index` of a `samples`-point sweep at `radius`.
std::pair<Rat, Rat> circle_sample_point(const Rat& radius, int index, int samples);

// Parallel sweep (OpenMP over the samples). Results are deterministic and
// identical to the serial reference. samples >= 8; odd counts round up.
CircleProbe probe_circle(const SparsePoly& p, const Rat& radius, int samples);

// Plain-loop reference implementation, kept for testing and benchmarking.
CircleProbe probe_circle_serial(const SparsePoly& p, const Rat& radius, int samples);

// Shrinks the arc between the two samples of one recorded sign change until
// its width in the chart parameter is at most `width`, keeping strictly
// opposite signs (or an exact zero) at the ends. Every point involved lies
// exactly on the circle, so a sign flip pins a curve point of norm exactly
// `radius` inside the refined arc.
struct RefinedCrossing {
    Rat u_lo, u_hi;           // chart parameter bracket
    bool antipodal_chart;     // true when the arc lies on the mirrored half
    std::pair<Rat, Rat> point_lo, point_hi;
    int sign_lo = 0, sign_hi = 0;  // opposite, or one side an exact zero
};

RefinedCrossing refine_sign_change(const SparsePoly& p, const CircleProbe& probe,
                                   size_t change_index, const Rat& width);

struct RadiusFinding {
    CircleProbe probe;
};

// One-sided unboundedness probe over increasing radii: a sign change at the
// largest radius is evidence that the curve still crosses that circle;
// absence of sign changes proves nothing.
struct UnboundednessReport {
    std::vector<RadiusFinding> findings;
    bool evidence_of_unboundedness = false;  // sign change at the largest radius
};

inline const std::vector<Rat>& default_oracle_radii() {
    static const std::vector<Rat> radii{Rat(10), Rat(100), Rat(1000), Rat(10000)};
    return radii;
}
inline constexpr int kDefaultOracleSamples = 512;

UnboundednessReport unboundedness_evidence(const SparsePoly& p, const std::vector<Rat>& radii,
                                           int samples);

}  // namespace curvebound
