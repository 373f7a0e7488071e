#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gg/pointset.hpp"
#include "gg/words.hpp"

namespace gg {

/// Enumerated height shells of one gate set with per-shell nearest-neighbor
/// indexes; the working state behind all approximation queries.
class GateSystem {
  public:
    GateSystem(GateSet set, int t_max);

    GateSet set() const { return set_; }
    int t_max() const { return t_max_; }

    const std::vector<Quat>& shell_quats(int h) const { return quats_[h]; }
    const std::vector<Vec4>& shell_unit(int h) const { return unit_[h]; }

    // Distance from q to the height-h shell U(h); infinity for an empty h.
    double shell_distance(int h, const Vec4& q) const;

    // Indices of shell-h points within dist <= r of q.
    std::vector<std::uint32_t> shell_within(int h, const Vec4& q, double r) const;

    // Distances to V(0), V(1), ..., V(t_max): the running minimum over
    // shells. Nonincreasing by construction.
    std::vector<double> cumulative_distances(const Vec4& q) const;

  private:
    GateSet set_;
    int t_max_;
    std::vector<std::vector<Quat>> quats_;
    std::vector<std::vector<Vec4>> unit_;
    std::vector<SphereGrid> grids_;
};

struct SynthesisResult {
    Psu2Point target;
    GateWord word;
    double achieved_distance = 0.0;
    int height = 0;
    int t_searched = 0;
};

// Exact argmin of metric_d(target, .) over V(t); exact ties resolved by
// lexicographic word order.
SynthesisResult nearest_gate(const GateSystem& sys, const Psu2Point& target, int t);

// floor((2 + eps^eps) * log_q(1 / eps)); requires 0 < eps < 1.
int t_prime(double eps, int q = 5);

// Fraction of n Haar targets within eps of V(t).
double coverage_fraction(const GateSystem& sys, int t, double eps, std::int64_t n,
                         std::uint64_t seed);
double coverage_fraction_serial(const GateSystem& sys, int t, double eps, std::int64_t n,
                                std::uint64_t seed);

struct TEpsEstimate {
    int t = 0;          // smallest covering t, or t_max when not covered
    bool covered = false;
};

// Smallest t <= t_max with no sampled probe farther than eps from V(t).
// A sampled estimate: it can only under-estimate the true t_eps.
TEpsEstimate t_epsilon_estimate(const GateSystem& sys, double eps, std::int64_t probes,
                                std::uint64_t seed);

struct EfficiencyRow {
    double eps = 0.0;
    bool covered = false;          // t_eps established within t_max
    int t_eps = 0;
    std::int64_t v_size = 0;       // |V(t_eps)|
    double k_hat = 0.0;            // log5 |V| / (3 log5 (1/eps))
    double k_lower_traj = 0.0;     // finite-t value of the 4/3 lower bound chain
    double k_upper_traj = 0.0;     // finite-t value of the kernel upper bound, fitted c
    double k_conditional = 0.0;    // trajectory under the covering conjecture, tends to 4/3
    double packing = 0.0;          // |V(t_eps)| * mu(B(eps)), must be >= 1
    double frac_height_3log = 0.0; // targets reached with height <= 3 log5(1/eps)
    double frac_height_4log = 0.0; // ... and <= 4 log5(1/eps)
};

struct EfficiencyReport {
    GateSet set = GateSet::S;
    int t_max = 0;
    std::int64_t probes = 0;
    std::uint64_t seed = 0;
    double c_fit = 0.0;            // kernel-bound constant fitted over covered rows
    std::vector<EfficiencyRow> rows;
};

// One row per eps (strictly decreasing list), all sampled columns sharing
// one probe stream. Rows whose eps is out of reach at t_max are flagged
// NOT-COVERED and keep only the formula columns.
EfficiencyReport efficiency_table(const GateSystem& sys, const std::vector<double>& eps_list,
                                  std::int64_t probes, std::uint64_t seed);

// The conjecture-conditional efficiency trajectory at accuracy eps.
double k_conditional(double eps);

// Secondary check in the SO(3) picture: fraction of uniform S^2 targets
// within eps (in d = sqrt(1 - <u, w>)) of the orbit of the north pole
// under the rotations of V(t).
double s2_orbit_coverage(const GateSystem& sys, int t, double eps, std::int64_t n,
                         std::uint64_t seed);

}  // namespace gg
