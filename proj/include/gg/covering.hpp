#pragma once

#include <cstdint>
#include <vector>

#include "gg/pointset.hpp"

namespace gg {

// The normalized union of the four-square shells 5^t and 5^{t-1}, which
// after removing the sign equals the union of the primitive shells
// 5^h for h <= t; 6 * 5^t - 2 points in total.
PointSet build_point_set(int t);

/// Sampled lower bound for the covering radius of a point set on S^3.
struct CoveringEstimate {
    int t = 0;
    std::int64_t point_count = 0;
    double radius_lower_bound = 0.0;   // max over probes, then refined
    double probe_max = 0.0;            // max over probes only (monotone in probes)
    double conjectured_radius = 0.0;   // 2 * 5^{-t/4}
    std::int64_t probe_count = 0;
    std::uint64_t seed = 0;
};

// Haar probes followed by coordinate-wise spherical hill climbing from the
// best probe. The result can only under-estimate the covering radius.
CoveringEstimate covering_radius_estimate(const PointSet& ps, int t, std::int64_t probes,
                                          std::uint64_t seed, bool refine = true);

// Serial reference for the probe sweep; must match the parallel path.
double max_min_distance_serial(const PointSet& ps, std::int64_t probes, std::uint64_t seed);

/// An exhaustively verified ball free of points of the height-t set.
struct HoleCertificate {
    Quat y;
    int t = 0;
    Vec4 center{};
    double radius = 0.0;         // 1 / (20 t sqrt(|y| 5^{t/2}))
    double delta = 0.0;          // annulus width
    int annulus = -1;            // chosen empty annulus index
    bool verified_empty = false;
};

// Splits the ball of radius (t+2)*Delta around y/|y| into t+2 annuli; at
// most t+1 distance values can occur there, so an empty annulus exists.
// The certified ball sits at its mid-radius; emptiness is then re-verified
// by an exhaustive scan. Throws std::logic_error if no annulus is empty.
HoleCertificate construct_hole(const Quat& y, int t, const PointSet& ps);
HoleCertificate construct_hole(const Quat& y, int t);

enum class RadiusVariant { C4Exact, C5Polylog };

struct ConjectureRow {
    int t = 0;
    std::int64_t point_count = 0;
    double conjectured_radius = 0.0;
    double sampled_lower_bound = 0.0;
    double ratio = 0.0;            // sampled / conjectured
    bool consistent = false;       // sampled <= conjectured
    double n_inv_quarter = 0.0;    // N^{-1/4}, the generic lower-bound scale
};

// One row per t; a ratio above 1 is a reportable finding, not an error.
std::vector<ConjectureRow> conjecture_report(int t_lo, int t_hi, std::int64_t probes,
                                             std::uint64_t seed,
                                             RadiusVariant variant = RadiusVariant::C4Exact,
                                             double n_exponent = 1.0);

double conjectured_covering_radius(int t, RadiusVariant variant = RadiusVariant::C4Exact,
                                   double n_exponent = 1.0);

}  // namespace gg
