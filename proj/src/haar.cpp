#include "gg/haar.hpp"

#include <cmath>
#include <stdexcept>

#include "gg/rng.hpp"

namespace gg {

Psu2Point haar_point(std::uint64_t seed, std::uint64_t index) {
    for (std::uint64_t bump = 0;; ++bump) {
        auto z = normal4(seed, index + (bump << 48));
        double n2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2] + z[3] * z[3];
        if (n2 > 1e-300) {
            double n = std::sqrt(n2);
            return Psu2Point({z[0] / n, z[1] / n, z[2] / n, z[3] / n});
        }
        // astronomically unlikely; retry on a disjoint index
    }
}

std::vector<Psu2Point> sample_haar(std::size_t n, std::uint64_t seed) {
    std::vector<Psu2Point> out(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        out[i] = haar_point(seed, static_cast<std::uint64_t>(i));
    return out;
}

std::vector<Psu2Point> sample_haar_serial(std::size_t n, std::uint64_t seed) {
    std::vector<Psu2Point> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(haar_point(seed, i));
    return out;
}

static void check_eps_range(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::out_of_range("ball measure: eps outside [0, 1]");
}

double ball_measure_s3(double eps) {
    check_eps_range(eps);
    double alpha = std::acos(1.0 - eps * eps);
    return 2.0 * (alpha - std::sin(alpha) * std::cos(alpha)) / M_PI;
}

double ball_measure_s2(double eps) {
    check_eps_range(eps);
    return 0.5 * eps * eps;
}

double mc_ball_measure_s3(double eps, std::size_t n, std::uint64_t seed) {
    check_eps_range(eps);
    const Psu2Point center;  // e1
    long long hits = 0;
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (long long i = 0; i < nn; ++i)
        if (metric_d(haar_point(seed, i), center) < eps) ++hits;
    return n == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(n);
}

double mc_ball_measure_s2(double eps, std::size_t n, std::uint64_t seed) {
    check_eps_range(eps);
    long long hits = 0;
    const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (long long i = 0; i < nn; ++i) {
        auto z = normal3(seed, i);
        double n2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
        if (n2 <= 1e-300) continue;
        double cos_theta = z[2] / std::sqrt(n2);  // against the north pole
        if (1.0 - cos_theta < eps * eps) ++hits;
    }
    return n == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(n);
}

}  // namespace gg
