#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "gg/psu2.hpp"
#include "gg/quat.hpp"

namespace gg {

/// Nearest-neighbor index for unit 4-vectors under d = sqrt(1 - |<x,y>|).
///
/// Cell hashing over the cube [-1, 1]^4: each point is inserted under both
/// signs, queries scan Chebyshev shells of cells outward until the best
/// candidate beats the k*h Euclidean lower bound of the unscanned shells
/// (Euclidean distance to the doubled set is sqrt(2) times the metric).
/// Sets below kLinearCutoff skip the grid; the linear scan also serves as
/// the correctness oracle for the index in tests.
class SphereGrid {
  public:
    static constexpr std::size_t kLinearCutoff = 10'000;

    struct Hit {
        double dist = std::numeric_limits<double>::infinity();
        std::uint32_t index = 0;
    };

    SphereGrid() = default;
    explicit SphereGrid(std::vector<Vec4> points, bool force_grid = false);

    // Exact nearest point; ties resolved toward the smallest index.
    Hit nearest(const Vec4& q) const;

    // Indices of all points within dist <= r of q (inclusive).
    std::vector<std::uint32_t> within(const Vec4& q, double r) const;

    std::size_t size() const { return pts_.size(); }
    const Vec4& point(std::uint32_t i) const { return pts_[i]; }
    bool uses_grid() const { return res_ > 0; }

  private:
    Hit nearest_linear(const Vec4& q) const;
    Hit nearest_grid(const Vec4& q) const;
    std::uint64_t cell_key(const Vec4& v) const;
    int coord_cell(double x) const;

    std::vector<Vec4> pts_;
    int res_ = 0;       // cells per axis; 0 = linear mode
    double cell_ = 0.0;
    std::vector<std::uint32_t> entries_;  // point indices grouped by cell
    std::unordered_map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> cells_;
};

/// Finite subset of PSU(2) with its integer provenance: quats[i] is the
/// canonical lattice point, shell[i] the exponent h of its norm 5^h.
struct PointSet {
    std::vector<Quat> quats;
    std::vector<Vec4> unit;       // normalized canonical coordinates
    std::vector<std::int16_t> shell;
    SphereGrid index;

    std::size_t size() const { return quats.size(); }

    static PointSet from_quats(std::vector<Quat> qs, std::vector<std::int16_t> shells);

    SphereGrid::Hit nearest(const Vec4& q) const { return index.nearest(q); }
    SphereGrid::Hit nearest(const Psu2Point& p) const { return index.nearest(p.coords()); }
};

}  // namespace gg
