#include "gg/covering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gg/haar.hpp"
#include "gg/words.hpp"

namespace gg {

PointSet build_point_set(int t) {
    if (t < 1) throw std::invalid_argument("build_point_set: t < 1");
    std::vector<Shell> shells = enumerate_shells(GateSet::T, t);
    std::vector<Quat> qs;
    std::vector<std::int16_t> hs;
    for (const Shell& sh : shells) {
        qs.insert(qs.end(), sh.elems.begin(), sh.elems.end());
        hs.insert(hs.end(), sh.elems.size(), static_cast<std::int16_t>(sh.t));
    }
    return PointSet::from_quats(std::move(qs), std::move(hs));
}

namespace {

struct BestProbe {
    double dist = -1.0;
    std::int64_t index = 0;
};

BestProbe probe_sweep(const PointSet& ps, std::int64_t probes, std::uint64_t seed,
                      [[maybe_unused]] bool parallel) {
    BestProbe best;
#pragma omp parallel if (parallel)
    {
        BestProbe local;
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < probes; ++i) {
            double d = ps.nearest(haar_point(seed, static_cast<std::uint64_t>(i))).dist;
            if (d > local.dist || (d == local.dist && i < local.index)) local = {d, i};
        }
#pragma omp critical
        {
            if (local.dist > best.dist ||
                (local.dist == best.dist && local.index < best.index))
                best = local;
        }
    }
    return best;
}

// Coordinate-wise hill climbing on the min-distance function, shrinking the
// step until it stops paying. Deterministic for a fixed start.
double refine_max_min(const PointSet& ps, Psu2Point start) {
    Vec4 x = start.coords();
    double fx = ps.nearest(x).dist;
    double step = 0.05;
    for (int sweep = 0; step > 1e-7 && sweep < 2000; ++sweep) {
        bool improved = false;
        for (int dim = 0; dim < 4; ++dim) {
            for (double dir : {+1.0, -1.0}) {
                Vec4 cand = x;
                cand[dim] += dir * step;
                double n = std::sqrt(dot4(cand, cand));
                for (double& v : cand) v /= n;
                cand = canonical_vec(cand);
                double fc = ps.nearest(cand).dist;
                if (fc > fx) {
                    x = cand;
                    fx = fc;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return fx;
}

}  // namespace

double max_min_distance_serial(const PointSet& ps, std::int64_t probes, std::uint64_t seed) {
    return probe_sweep(ps, probes, seed, false).dist;
}

CoveringEstimate covering_radius_estimate(const PointSet& ps, int t, std::int64_t probes,
                                          std::uint64_t seed, bool refine) {
    if (probes < 1) throw std::invalid_argument("covering_radius_estimate: probes < 1");
    CoveringEstimate est;
    est.t = t;
    est.point_count = static_cast<std::int64_t>(ps.size());
    est.probe_count = probes;
    est.seed = seed;
    est.conjectured_radius = conjectured_covering_radius(t);

    BestProbe best = probe_sweep(ps, probes, seed, true);
    est.probe_max = best.dist;
    est.radius_lower_bound = best.dist;
    if (refine) {
        double refined =
            refine_max_min(ps, haar_point(seed, static_cast<std::uint64_t>(best.index)));
        est.radius_lower_bound = std::max(est.radius_lower_bound, refined);
    }
    return est;
}

double conjectured_covering_radius(int t, RadiusVariant variant, double n_exponent) {
    double scale = std::pow(5.0, -0.25 * t);
    if (variant == RadiusVariant::C4Exact) return 2.0 * scale;
    return std::pow(static_cast<double>(t), n_exponent) * scale;
}

HoleCertificate construct_hole(const Quat& y, int t) {
    return construct_hole(y, t, build_point_set(t));
}

HoleCertificate construct_hole(const Quat& y, int t, const PointSet& ps) {
    if (norm(y) == 0) throw std::invalid_argument("construct_hole: y = 0");
    if (t < 1) throw std::invalid_argument("construct_hole: t < 1");

    HoleCertificate cert;
    cert.y = y;
    cert.t = t;

    const double abs_y = std::sqrt(static_cast<double>(norm(y)));
    const double q4 = std::sqrt(abs_y * std::pow(5.0, 0.5 * t));  // (N(y) 5^t)^{1/4}
    cert.radius = 1.0 / (20.0 * t * q4);
    cert.delta = 1.0 / ((t + 2) * std::sqrt(2.0) * q4);

    const Psu2Point yhat = Psu2Point::from_quat(y);

    // Conservative occupancy: a point within 1e-12 of an annulus boundary
    // marks both neighbors.
    std::vector<bool> occupied(static_cast<std::size_t>(t) + 2, false);
    const double outer = (t + 2) * cert.delta;
    for (const Vec4& p : ps.unit) {
        double d = metric_d(yhat.coords(), p);
        if (d <= 0.0 || d > outer + 1e-12) continue;
        int k = std::min(static_cast<int>(d / cert.delta), t + 1);
        occupied[static_cast<std::size_t>(k)] = true;
        double frac = d / cert.delta - k;
        if (frac < 1e-9 && k > 0) occupied[static_cast<std::size_t>(k) - 1] = true;
        if (frac > 1.0 - 1e-9 && k < t + 1) occupied[static_cast<std::size_t>(k) + 1] = true;
    }

    cert.annulus = -1;
    for (int k = 0; k < t + 2; ++k)
        if (!occupied[static_cast<std::size_t>(k)]) {
            cert.annulus = k;
            break;
        }
    if (cert.annulus < 0)
        throw std::logic_error("construct_hole: every annulus occupied for y=" + to_string(y));

    // Center on the mid-sphere of the empty annulus, offset from yhat along
    // a fixed tangent direction.
    const double rho = (cert.annulus + 0.5) * cert.delta;
    const double theta = std::acos(1.0 - rho * rho);
    int axis = 0;
    for (int i = 1; i < 4; ++i)
        if (std::fabs(yhat[i]) < std::fabs(yhat[axis])) axis = i;
    Vec4 u{};
    u[axis] = 1.0;
    double proj = dot4(u, yhat.coords());
    for (int i = 0; i < 4; ++i) u[i] -= proj * yhat[i];
    double un = std::sqrt(dot4(u, u));
    for (double& v : u) v /= un;
    Vec4 center;
    for (int i = 0; i < 4; ++i) center[i] = std::cos(theta) * yhat[i] + std::sin(theta) * u[i];
    cert.center = canonical_vec(center);

    // The certificate itself: exhaustive scan, no index involved.
    cert.verified_empty = true;
    for (const Vec4& p : ps.unit)
        if (metric_d(cert.center, p) <= cert.radius) {
            cert.verified_empty = false;
            break;
        }
    return cert;
}

std::vector<ConjectureRow> conjecture_report(int t_lo, int t_hi, std::int64_t probes,
                                             std::uint64_t seed, RadiusVariant variant,
                                             double n_exponent) {
    if (t_lo < 1 || t_hi < t_lo) throw std::invalid_argument("conjecture_report: bad t range");
    std::vector<ConjectureRow> rows;
    for (int t = t_lo; t <= t_hi; ++t) {
        PointSet ps = build_point_set(t);
        CoveringEstimate est = covering_radius_estimate(ps, t, probes, seed);
        ConjectureRow row;
        row.t = t;
        row.point_count = est.point_count;
        row.conjectured_radius = conjectured_covering_radius(t, variant, n_exponent);
        row.sampled_lower_bound = est.radius_lower_bound;
        row.ratio = row.sampled_lower_bound / row.conjectured_radius;
        row.consistent = row.sampled_lower_bound <= row.conjectured_radius;
        row.n_inv_quarter = std::pow(static_cast<double>(est.point_count), -0.25);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gg
