#include "gg/pointset.hpp"

#include <algorithm>
#include <cmath>

namespace gg {

namespace {

inline double pair_dist(const Vec4& q, const Vec4& p) { return metric_d(q, p); }

}  // namespace

int SphereGrid::coord_cell(double x) const {
    int c = static_cast<int>((x + 1.0) / cell_);
    return std::clamp(c, 0, res_ - 1);
}

std::uint64_t SphereGrid::cell_key(const Vec4& v) const {
    std::uint64_t key = 0;
    for (int i = 0; i < 4; ++i) key = (key << 16) | static_cast<std::uint64_t>(coord_cell(v[i]));
    return key;
}

SphereGrid::SphereGrid(std::vector<Vec4> points, bool force_grid) : pts_(std::move(points)) {
    if (pts_.empty() || (pts_.size() < kLinearCutoff && !force_grid)) return;

    res_ = std::clamp(static_cast<int>(std::cbrt(static_cast<double>(pts_.size())) * 0.8), 2, 80);
    cell_ = 2.0 / res_;

    // Two entries per point (both signs), grouped by cell via counting sort.
    std::vector<std::pair<std::uint64_t, std::uint32_t>> tagged;
    tagged.reserve(pts_.size() * 2);
    for (std::uint32_t i = 0; i < pts_.size(); ++i) {
        const Vec4& p = pts_[i];
        tagged.emplace_back(cell_key(p), i);
        tagged.emplace_back(cell_key({-p[0], -p[1], -p[2], -p[3]}), i);
    }
    std::sort(tagged.begin(), tagged.end());

    entries_.resize(tagged.size());
    cells_.reserve(tagged.size());
    std::size_t run = 0;
    for (std::size_t i = 0; i < tagged.size(); ++i) {
        entries_[i] = tagged[i].second;
        if (i + 1 == tagged.size() || tagged[i + 1].first != tagged[i].first) {
            cells_.emplace(tagged[i].first,
                           std::make_pair(static_cast<std::uint32_t>(run),
                                          static_cast<std::uint32_t>(i + 1 - run)));
            run = i + 1;
        }
    }
}

SphereGrid::Hit SphereGrid::nearest_linear(const Vec4& q) const {
    Hit best;
    for (std::uint32_t i = 0; i < pts_.size(); ++i) {
        double d = pair_dist(q, pts_[i]);
        if (d < best.dist) best = {d, i};
    }
    return best;
}

SphereGrid::Hit SphereGrid::nearest_grid(const Vec4& q) const {
    Hit best;
    int c[4];
    for (int i = 0; i < 4; ++i) c[i] = coord_cell(q[i]);

    auto scan_cell = [&](int i0, int i1, int i2, int i3) {
        std::uint64_t key = (static_cast<std::uint64_t>(i0) << 48) |
                            (static_cast<std::uint64_t>(i1) << 32) |
                            (static_cast<std::uint64_t>(i2) << 16) | static_cast<std::uint64_t>(i3);
        auto it = cells_.find(key);
        if (it == cells_.end()) return;
        for (std::uint32_t e = it->second.first; e < it->second.first + it->second.second; ++e) {
            std::uint32_t idx = entries_[e];
            double d = pair_dist(q, pts_[idx]);
            if (d < best.dist || (d == best.dist && idx < best.index)) best = {d, idx};
        }
    };

    for (int k = 0; k <= res_; ++k) {
        // After shells 0..k-1, unscanned points sit at Chebyshev cell
        // distance >= k, hence Euclidean distance >= (k-1) * cell.
        if (k > 0 && best.dist * std::sqrt(2.0) <= (k - 1) * cell_) break;
        bool touched = false;
        int lo[4], hi[4];
        for (int i = 0; i < 4; ++i) {
            lo[i] = std::max(0, c[i] - k);
            hi[i] = std::min(res_ - 1, c[i] + k);
        }
        for (int i0 = lo[0]; i0 <= hi[0]; ++i0)
            for (int i1 = lo[1]; i1 <= hi[1]; ++i1)
                for (int i2 = lo[2]; i2 <= hi[2]; ++i2)
                    for (int i3 = lo[3]; i3 <= hi[3]; ++i3) {
                        int cheb = std::max({std::abs(i0 - c[0]), std::abs(i1 - c[1]),
                                             std::abs(i2 - c[2]), std::abs(i3 - c[3])});
                        if (cheb != k) continue;
                        touched = true;
                        scan_cell(i0, i1, i2, i3);
                    }
        if (!touched && best.dist < std::numeric_limits<double>::infinity()) break;
    }
    return best;
}

SphereGrid::Hit SphereGrid::nearest(const Vec4& q) const {
    if (res_ == 0) return nearest_linear(q);
    return nearest_grid(q);
}

std::vector<std::uint32_t> SphereGrid::within(const Vec4& q, double r) const {
    std::vector<std::uint32_t> out;
    if (res_ == 0) {
        for (std::uint32_t i = 0; i < pts_.size(); ++i)
            if (pair_dist(q, pts_[i]) <= r) out.push_back(i);
        return out;
    }
    // Euclidean radius of the search ball around either representative.
    double re = r * std::sqrt(2.0);
    int reach = static_cast<int>(re / cell_) + 1;
    int c[4];
    for (int i = 0; i < 4; ++i) c[i] = coord_cell(q[i]);
    for (int i0 = std::max(0, c[0] - reach); i0 <= std::min(res_ - 1, c[0] + reach); ++i0)
        for (int i1 = std::max(0, c[1] - reach); i1 <= std::min(res_ - 1, c[1] + reach); ++i1)
            for (int i2 = std::max(0, c[2] - reach); i2 <= std::min(res_ - 1, c[2] + reach); ++i2)
                for (int i3 = std::max(0, c[3] - reach); i3 <= std::min(res_ - 1, c[3] + reach);
                     ++i3) {
                    std::uint64_t key = (static_cast<std::uint64_t>(i0) << 48) |
                                        (static_cast<std::uint64_t>(i1) << 32) |
                                        (static_cast<std::uint64_t>(i2) << 16) |
                                        static_cast<std::uint64_t>(i3);
                    auto it = cells_.find(key);
                    if (it == cells_.end()) continue;
                    for (std::uint32_t e = it->second.first;
                         e < it->second.first + it->second.second; ++e)
                        if (pair_dist(q, pts_[entries_[e]]) <= r) out.push_back(entries_[e]);
                }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PointSet PointSet::from_quats(std::vector<Quat> qs, std::vector<std::int16_t> shells) {
    PointSet ps;
    ps.quats = std::move(qs);
    ps.shell = std::move(shells);
    ps.unit.reserve(ps.quats.size());
    for (const Quat& q : ps.quats) {
        double n = std::sqrt(static_cast<double>(norm(q)));
        ps.unit.push_back(canonical_vec({q.a / n, q.b / n, q.c / n, q.d / n}));
    }
    ps.index = SphereGrid(ps.unit);
    return ps;
}

}  // namespace gg
