#include "doctest.h"

#include <cmath>

#include "gg/covering.hpp"
#include "gg/haar.hpp"
#include "gg/pointset.hpp"

using namespace gg;

namespace {

SphereGrid::Hit brute_nearest(const std::vector<Vec4>& pts, const Vec4& q) {
    SphereGrid::Hit best;
    for (std::uint32_t i = 0; i < pts.size(); ++i) {
        double d = metric_d(q, pts[i]);
        if (d < best.dist) best = {d, i};
    }
    return best;
}

}  // namespace

TEST_CASE("grid search equals the linear-scan oracle") {
    std::vector<Vec4> pts;
    for (int i = 0; i < 5000; ++i) pts.push_back(haar_point(5, i).coords());
    SphereGrid grid(pts, /*force_grid=*/true);
    REQUIRE(grid.uses_grid());
    SphereGrid linear(pts);
    REQUIRE_FALSE(linear.uses_grid());

    for (int i = 0; i < 400; ++i) {
        Vec4 q = haar_point(6, i).coords();
        auto a = grid.nearest(q);
        auto b = linear.nearest(q);
        CHECK(a.dist == b.dist);
        CHECK(a.index == b.index);
    }
    // stored points themselves come back at distance zero
    for (int i = 0; i < 50; ++i) CHECK(grid.nearest(pts[i]).dist == 0.0);
}

TEST_CASE("grid range query equals the brute filter") {
    std::vector<Vec4> pts;
    for (int i = 0; i < 3000; ++i) pts.push_back(haar_point(15, i).coords());
    SphereGrid grid(pts, true);
    for (int i = 0; i < 50; ++i) {
        Vec4 q = haar_point(16, i).coords();
        double r = 0.05 + 0.1 * (i % 5);
        auto got = grid.within(q, r);
        std::vector<std::uint32_t> want;
        for (std::uint32_t j = 0; j < pts.size(); ++j)
            if (metric_d(q, pts[j]) <= r) want.push_back(j);
        CHECK(got == want);
    }
}

TEST_CASE("point sets carry shell provenance") {
    PointSet ps = build_point_set(1);
    CHECK(ps.size() == 28);
    int h0 = 0, h1 = 0;
    for (auto s : ps.shell) (s == 0 ? h0 : h1)++;
    CHECK(h0 == 4);
    CHECK(h1 == 24);
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(ps.nearest(ps.unit[i]).dist == 0.0);

    CHECK(build_point_set(2).size() == 148);
    CHECK_THROWS_AS(build_point_set(0), std::invalid_argument);
}

TEST_CASE("nearest search on a big shell stays exact") {
    PointSet ps = build_point_set(4);  // 3748 points, linear
    std::vector<Vec4> copy = ps.unit;
    SphereGrid forced(copy, true);
    REQUIRE(forced.uses_grid());
    for (int i = 0; i < 200; ++i) {
        Vec4 q = haar_point(26, i).coords();
        auto a = forced.nearest(q);
        auto b = brute_nearest(ps.unit, q);
        CHECK(a.dist == b.dist);
        CHECK(a.index == b.index);
    }
}
