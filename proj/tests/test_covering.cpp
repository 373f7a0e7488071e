#include "doctest.h"

#include <cmath>

#include "gg/covering.hpp"
#include "gg/haar.hpp"

using namespace gg;

namespace {

// The four unit points e1..e4 modulo sign.
PointSet unit_point_set() {
    return PointSet::from_quats(
        {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}, {0, 0, 0, 0});
}

}  // namespace

TEST_CASE("max-min machinery on the four unit points") {
    PointSet ps = unit_point_set();
    // (1,1,1,1)/2 is the deep point: every |<x, e_i>| = 1/2
    Vec4 far{0.5, 0.5, 0.5, 0.5};
    CHECK(ps.nearest(far).dist == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    CoveringEstimate est = covering_radius_estimate(ps, 0, 100'000, 3);
    CHECK(est.point_count == 4);
    CHECK(est.radius_lower_bound <= std::sqrt(0.5) + 1e-9);
    CHECK(est.radius_lower_bound == doctest::Approx(std::sqrt(0.5)).epsilon(2e-3));
}

TEST_CASE("four-point covering radius converges with refinement") {
    PointSet ps = unit_point_set();
    CoveringEstimate est = covering_radius_estimate(ps, 0, 1'000'000, 4);
    CHECK(std::fabs(est.radius_lower_bound - std::sqrt(0.5)) <= 1e-3);
}

TEST_CASE("probe sweep is monotone in the probe count and matches serial") {
    PointSet ps = build_point_set(2);
    CoveringEstimate small = covering_radius_estimate(ps, 2, 2000, 7, /*refine=*/false);
    CoveringEstimate big = covering_radius_estimate(ps, 2, 4000, 7, /*refine=*/false);
    CHECK(big.probe_max >= small.probe_max);
    CHECK(small.radius_lower_bound == small.probe_max);
    CHECK(max_min_distance_serial(ps, 2000, 7) == small.probe_max);
}

TEST_CASE("hole certificate for the identity at t = 2") {
    PointSet ps = build_point_set(2);
    HoleCertificate cert = construct_hole({1, 0, 0, 0}, 2, ps);
    CHECK(cert.radius == doctest::Approx(1.0 / (40.0 * std::sqrt(5.0))).epsilon(1e-12));
    CHECK(cert.verified_empty);
    CHECK(cert.annulus >= 0);
    CHECK(cert.annulus <= 3);
    // the certified ball fits strictly inside one annulus
    CHECK(2.0 * cert.radius < cert.delta);
}

TEST_CASE("hole certificates verify by exhaustive scan") {
    for (int t : {3, 4}) {
        PointSet ps = build_point_set(t);
        if (t == 4) CHECK(ps.size() == 3748);
        for (Quat y : {Quat{1, 0, 0, 0}, Quat{1, 2, 0, 0}}) {
            HoleCertificate cert = construct_hole(y, t, ps);
            CHECK(cert.verified_empty);
            // re-verify the emptiness claim right here
            for (const Vec4& p : ps.unit) CHECK(metric_d(cert.center, p) > cert.radius);
        }
    }
}

TEST_CASE("annulus scheme constants") {
    // 2r < delta is the strict-fit inequality 10t > sqrt(2)(t + 2)
    for (int t = 1; t <= 12; ++t) {
        double q4 = std::sqrt(1.0 * std::pow(5.0, 0.5 * t));
        double r = 1.0 / (20.0 * t * q4);
        double delta = 1.0 / ((t + 2) * std::sqrt(2.0) * q4);
        CHECK(2.0 * r < delta);
        CHECK(10.0 * t > std::sqrt(2.0) * (t + 2));
    }
    CHECK_THROWS_AS(construct_hole({0, 0, 0, 0}, 2), std::invalid_argument);
}

TEST_CASE("conjecture report rows") {
    auto rows = conjecture_report(2, 4, 3000, 11);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].t == 2);
    CHECK(rows[0].point_count == 148);
    CHECK(rows[0].conjectured_radius == doctest::Approx(2.0 * std::pow(5.0, -0.5)));
    CHECK(rows[2].conjectured_radius == doctest::Approx(0.4));
    CHECK(conjectured_covering_radius(8) == doctest::Approx(0.08));
    CHECK(rows[1].point_count == 748);
    for (const auto& r : rows) {
        CHECK(r.sampled_lower_bound > 0.0);
        CHECK(r.ratio == doctest::Approx(r.sampled_lower_bound / r.conjectured_radius));
        CHECK(r.consistent);  // a violation would be a reportable finding
        CHECK(r.n_inv_quarter ==
              doctest::Approx(std::pow(static_cast<double>(r.point_count), -0.25)));
    }
    // polylog variant with n = 1: radius t * 5^{-t/4}
    auto rows5 = conjecture_report(4, 4, 500, 11, RadiusVariant::C5Polylog, 1.0);
    CHECK(rows5[0].conjectured_radius == doctest::Approx(4.0 * std::pow(5.0, -1.0)));
}
