#include "doctest.h"

#include <cmath>

#include "gg/haar.hpp"

using namespace gg;

namespace {

// Simpson quadrature of the two-cap volume fraction, the independent route
// to the closed form: each cap contributes (1/pi) * integral of sin^2.
double cap_quadrature(double eps) {
    double alpha = std::acos(1.0 - eps * eps);
    const int n = 10000;  // even
    double h = alpha / n, sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        double s = std::sin(i * h);
        double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * s * s;
    }
    return (4.0 / M_PI) * sum * h / 3.0;
}

}  // namespace

TEST_CASE("haar sampling basics") {
    CHECK(sample_haar(0, 1).empty());
    auto pts = sample_haar(500, 9);
    auto ref = sample_haar_serial(500, 9);
    REQUIRE(pts.size() == 500);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i] == ref[i]);
        CHECK(std::fabs(dot4(pts[i].coords(), pts[i].coords()) - 1.0) <= 1e-12);
    }
}

TEST_CASE("haar coordinates have the uniform second moment") {
    const std::size_t n = 1'000'000;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double x = haar_point(1, i)[0];
        acc += x * x;
    }
    CHECK(std::fabs(acc / n - 0.25) < 0.002);
}

TEST_CASE("haar stream is left invariant") {
    Vec4 g = haar_point(99, 0).coords();
    for (int i = 0; i < 500; ++i) {
        Vec4 x = haar_point(100, i).coords();
        double lhs = metric_d(mul4(g, x), Vec4{1, 0, 0, 0});
        double rhs = metric_d(x, mul4(conj4(g), Vec4{1, 0, 0, 0}));
        CHECK(std::fabs(lhs - rhs) <= 1e-10);
    }
}

TEST_CASE("s3 ball measure closed form") {
    CHECK(ball_measure_s3(0.0) == 0.0);
    CHECK(ball_measure_s3(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(ball_measure_s3(-0.1), std::out_of_range);
    CHECK_THROWS_AS(ball_measure_s3(1.1), std::out_of_range);

    double prev = 0.0;
    for (double eps = 0.02; eps <= 1.0; eps += 0.02) {
        double m = ball_measure_s3(eps);
        CHECK(m >= prev);
        prev = m;
    }

    for (double eps : {0.05, 0.1, 0.2, 0.4, 0.8})
        CHECK(ball_measure_s3(eps) == doctest::Approx(cap_quadrature(eps)).epsilon(1e-9));

    // mu(B(eps)) / eps^3 settles to a positive constant
    double r1 = ball_measure_s3(0.02) / std::pow(0.02, 3);
    double r2 = ball_measure_s3(0.002) / std::pow(0.002, 3);
    CHECK(r1 > 0.5);
    CHECK(std::fabs(r1 - r2) / r2 < 0.01);
}

TEST_CASE("s3 ball measure agrees with Monte Carlo within 3 sigma") {
    const std::size_t n = 1'000'000;
    for (double eps : {0.05, 0.1, 0.2, 0.4}) {
        double mu = ball_measure_s3(eps);
        double mc = mc_ball_measure_s3(eps, n, 1);
        double sigma = std::sqrt(mu * (1.0 - mu) / n);
        CHECK(std::fabs(mc - mu) <= 3.0 * sigma);
    }
}

TEST_CASE("s2 ball measure") {
    CHECK(ball_measure_s2(0.0) == 0.0);
    CHECK_THROWS_AS(ball_measure_s2(1.5), std::out_of_range);
    double prev = -1.0;
    for (double eps = 0.01; eps <= 0.5; eps += 0.01) {
        double m = ball_measure_s2(eps);
        CHECK(m > prev);
        prev = m;
        // exact cap identity: (1 - cos(acos(1 - eps^2))) / 2
        CHECK(m == doctest::Approx(0.5 * (1.0 - std::cos(std::acos(1.0 - eps * eps)))));
    }
    double mc = mc_ball_measure_s2(0.2, 1'000'000, 2);
    CHECK(std::fabs(mc - ball_measure_s2(0.2)) / ball_measure_s2(0.2) < 0.02);
    CHECK(std::fabs(mc - ball_measure_s2(0.2)) <=
          3.0 * std::sqrt(ball_measure_s2(0.2) / 1e6));
}
