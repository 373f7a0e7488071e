#include "gg/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gg/haar.hpp"
#include "gg/lattice.hpp"
#include "gg/rng.hpp"

namespace gg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log5(double x) { return std::log(x) / std::log(5.0); }

}  // namespace

GateSystem::GateSystem(GateSet set, int t_max) : set_(set), t_max_(t_max) {
    if (t_max < 0) throw std::invalid_argument("GateSystem: t_max < 0");
    std::vector<Shell> shells = enumerate_shells(set, t_max);
    quats_.resize(shells.size());
    unit_.resize(shells.size());
    grids_.resize(shells.size());
    for (std::size_t h = 0; h < shells.size(); ++h) {
        quats_[h] = std::move(shells[h].elems);
        unit_[h].reserve(quats_[h].size());
        for (const Quat& q : quats_[h]) {
            double n = std::sqrt(static_cast<double>(norm(q)));
            unit_[h].push_back(canonical_vec({q.a / n, q.b / n, q.c / n, q.d / n}));
        }
        grids_[h] = SphereGrid(unit_[h]);
    }
}

double GateSystem::shell_distance(int h, const Vec4& q) const {
    if (h < 0 || h > t_max_) throw std::out_of_range("shell_distance: h out of range");
    if (grids_[h].size() == 0) return kInf;
    return grids_[h].nearest(q).dist;
}

std::vector<std::uint32_t> GateSystem::shell_within(int h, const Vec4& q, double r) const {
    if (h < 0 || h > t_max_) throw std::out_of_range("shell_within: h out of range");
    return grids_[h].within(q, r);
}

std::vector<double> GateSystem::cumulative_distances(const Vec4& q) const {
    std::vector<double> out(static_cast<std::size_t>(t_max_) + 1);
    double best = kInf;
    for (int h = 0; h <= t_max_; ++h) {
        best = std::min(best, shell_distance(h, q));
        out[static_cast<std::size_t>(h)] = best;
    }
    return out;
}

SynthesisResult nearest_gate(const GateSystem& sys, const Psu2Point& target, int t) {
    if (t < 0 || t > sys.t_max()) throw budget_error("nearest_gate: t beyond enumerated range");

    const Vec4& q = target.coords();
    double best = kInf;
    for (int h = 0; h <= t; ++h) best = std::min(best, sys.shell_distance(h, q));

    // Gather every point achieving the minimum exactly, then pick the
    // lexicographically smallest word.
    std::optional<GateWord> best_word;
    for (int h = 0; h <= t; ++h) {
        for (std::uint32_t idx : sys.shell_within(h, q, best)) {
            if (metric_d(q, sys.shell_unit(h)[idx]) != best) continue;
            GateWord w = exact_synthesis(sys.shell_quats(h)[idx]);
            if (!best_word || w < *best_word) best_word = std::move(w);
        }
    }

    SynthesisResult res;
    res.target = target;
    res.word = *best_word;
    res.achieved_distance = best;
    res.height = res.word.height();
    res.t_searched = t;
    return res;
}

int t_prime(double eps, int q) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::out_of_range("t_prime: eps outside (0, 1)");
    double exponent = 2.0 + std::pow(eps, eps);
    double logq_inv = -std::log(eps) / std::log(static_cast<double>(q));
    return static_cast<int>(std::floor(exponent * logq_inv));
}

namespace {

double coverage_impl(const GateSystem& sys, int t, double eps, std::int64_t n,
                     std::uint64_t seed, [[maybe_unused]] bool parallel) {
    if (t < 0 || t > sys.t_max()) throw budget_error("coverage_fraction: t beyond range");
    std::int64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) if (parallel)
    for (std::int64_t i = 0; i < n; ++i) {
        const Vec4 q = haar_point(seed, static_cast<std::uint64_t>(i)).coords();
        double best = kInf;
        for (int h = 0; h <= t && best >= eps; ++h)
            best = std::min(best, sys.shell_distance(h, q));
        if (best < eps) ++hits;
    }
    return n == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(n);
}

}  // namespace

double coverage_fraction(const GateSystem& sys, int t, double eps, std::int64_t n,
                         std::uint64_t seed) {
    return coverage_impl(sys, t, eps, n, seed, true);
}

double coverage_fraction_serial(const GateSystem& sys, int t, double eps, std::int64_t n,
                                std::uint64_t seed) {
    return coverage_impl(sys, t, eps, n, seed, false);
}

TEpsEstimate t_epsilon_estimate(const GateSystem& sys, double eps, std::int64_t probes,
                                std::uint64_t seed) {
    if (probes < 1) throw std::invalid_argument("t_epsilon_estimate: probes < 1");
    int worst = 0;
    bool all_covered = true;
#pragma omp parallel for schedule(static) reduction(max : worst) reduction(&& : all_covered)
    for (std::int64_t i = 0; i < probes; ++i) {
        const Vec4 q = haar_point(seed, static_cast<std::uint64_t>(i)).coords();
        double best = kInf;
        int need = -1;
        for (int h = 0; h <= sys.t_max(); ++h) {
            best = std::min(best, sys.shell_distance(h, q));
            if (best < eps) {
                need = h;
                break;
            }
        }
        if (need < 0) {
            all_covered = false;
            need = sys.t_max();
        }
        worst = std::max(worst, need);
    }
    return {all_covered ? worst : sys.t_max(), all_covered};
}

double s2_orbit_coverage(const GateSystem& sys, int t, double eps, std::int64_t n,
                         std::uint64_t seed) {
    if (t < 0 || t > sys.t_max()) throw budget_error("s2_orbit_coverage: t beyond range");
    // orbit of the north pole: the third rotation column per group element
    std::vector<std::array<double, 3>> orbit;
    for (int h = 0; h <= t; ++h)
        for (const Vec4& v : sys.shell_unit(h)) {
            Rotation3 r = to_so3(Psu2Point(v));
            orbit.push_back({r(0, 2), r(1, 2), r(2, 2)});
        }

    std::int64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (std::int64_t i = 0; i < n; ++i) {
        auto z = normal3(seed, static_cast<std::uint64_t>(i));
        double zn = std::sqrt(z[0] * z[0] + z[1] * z[1] + z[2] * z[2]);
        if (zn <= 1e-300) continue;
        double best = kInf;
        for (const auto& p : orbit) {
            double dot = (z[0] * p[0] + z[1] * p[1] + z[2] * p[2]) / zn;
            double d2 = 1.0 - dot;
            if (d2 < best) best = d2;
        }
        if (best < eps * eps) ++hits;
    }
    return n == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(n);
}

double k_conditional(double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::out_of_range("k_conditional: eps outside (0, 1)");
    double tc = 4.0 * log5(2.0 / eps);
    double log_v = tc + log5(6.0 - 2.0 * std::pow(5.0, -tc));
    return log_v / (3.0 * log5(1.0 / eps));
}

EfficiencyReport efficiency_table(const GateSystem& sys, const std::vector<double>& eps_list,
                                  std::int64_t probes, std::uint64_t seed) {
    if (probes < 1) throw std::invalid_argument("efficiency_table: probes < 1");
    for (std::size_t i = 0; i + 1 < eps_list.size(); ++i)
        if (!(eps_list[i] > eps_list[i + 1]))
            throw std::invalid_argument("efficiency_table: eps list not strictly decreasing");
    for (double e : eps_list)
        if (!(e > 0.0 && e < 1.0))
            throw std::out_of_range("efficiency_table: eps outside (0, 1)");

    EfficiencyReport rep;
    rep.set = sys.set();
    rep.t_max = sys.t_max();
    rep.probes = probes;
    rep.seed = seed;

    // One distance profile per probe, shared by every row.
    const std::size_t np = static_cast<std::size_t>(probes);
    const std::size_t nh = static_cast<std::size_t>(sys.t_max()) + 1;
    std::vector<double> profile(np * nh);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < probes; ++i) {
        auto dists = sys.cumulative_distances(haar_point(seed, i).coords());
        std::copy(dists.begin(), dists.end(), profile.begin() + i * nh);
    }

    for (double eps : eps_list) {
        EfficiencyRow row;
        row.eps = eps;
        row.k_conditional = k_conditional(eps);

        int worst = 0;
        bool covered = true;
        std::int64_t h3 = 0, h4 = 0;
        const double budget3 = 3.0 * log5(1.0 / eps);
        const double budget4 = 4.0 * log5(1.0 / eps);
        for (std::size_t i = 0; i < np; ++i) {
            const double* d = &profile[i * nh];
            int need = -1;
            for (std::size_t h = 0; h < nh; ++h)
                if (d[h] < eps) {
                    need = static_cast<int>(h);
                    break;
                }
            if (need < 0) {
                covered = false;
                continue;
            }
            worst = std::max(worst, need);
            if (need <= budget3) ++h3;
            if (need <= budget4) ++h4;
        }
        row.covered = covered;
        row.t_eps = covered ? worst : sys.t_max();
        row.frac_height_3log = static_cast<double>(h3) / static_cast<double>(probes);
        row.frac_height_4log = static_cast<double>(h4) / static_cast<double>(probes);
        if (covered) {
            row.v_size = v_count(sys.set(), row.t_eps);
            row.k_hat = log5(static_cast<double>(row.v_size)) / (3.0 * log5(1.0 / eps));
            row.packing = static_cast<double>(row.v_size) * ball_measure_s3(eps);
            if (row.t_eps >= 1) {
                double lv = log5(static_cast<double>(row.v_size));
                row.k_lower_traj = lv / (3.0 * (row.t_eps / 4.0 + log5(20.0 * row.t_eps)));
            } else {
                row.k_lower_traj = std::numeric_limits<double>::quiet_NaN();
            }
        } else {
            row.v_size = 0;
            row.k_hat = std::numeric_limits<double>::quiet_NaN();
            row.packing = std::numeric_limits<double>::quiet_NaN();
            row.k_lower_traj = std::numeric_limits<double>::quiet_NaN();
        }
        rep.rows.push_back(row);
    }

    // Fit the kernel-bound constant c over covered rows with t >= 1, by the
    // mean of log5 c; then fill the upper trajectory column.
    double acc = 0.0;
    int cnt = 0;
    for (const EfficiencyRow& row : rep.rows) {
        if (!row.covered || row.t_eps < 1) continue;
        double c_row = static_cast<double>(row.v_size) * std::pow(row.eps, 4.0) /
                       (4.0 * M_PI * row.t_eps * row.t_eps);
        acc += log5(c_row);
        ++cnt;
    }
    rep.c_fit = cnt > 0 ? std::pow(5.0, acc / cnt) : 0.0;
    for (EfficiencyRow& row : rep.rows) {
        if (!row.covered || row.t_eps < 1 || rep.c_fit <= 0.0) {
            row.k_upper_traj = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        double num = log5(4.0 * M_PI * rep.c_fit * row.t_eps * row.t_eps);
        double den = 1.0 - num / log5(static_cast<double>(row.v_size));
        row.k_upper_traj =
            den > 0.0 ? 2.0 / den : std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

}  // namespace gg
