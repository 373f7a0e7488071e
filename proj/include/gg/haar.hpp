#pragma once

#include <cstdint>
#include <vector>

#include "gg/psu2.hpp"

namespace gg {

// Haar point number `index` of the stream for `seed`: four independent
// standard normals, normalized, canonical sign. Pure in (seed, index).
Psu2Point haar_point(std::uint64_t seed, std::uint64_t index);

std::vector<Psu2Point> sample_haar(std::size_t n, std::uint64_t seed);
std::vector<Psu2Point> sample_haar_serial(std::size_t n, std::uint64_t seed);

// Normalized Haar measure of a metric ball of radius eps in PSU(2).
// With alpha = arccos(1 - eps^2) the ball lifts to the two antipodal caps
// of colatitude alpha on S^3, so the measure is 2 (alpha - sin a cos a) / pi.
// Throws std::out_of_range unless 0 <= eps <= 1.
double ball_measure_s3(double eps);

// Spherical-cap measure on S^2 for the analogous metric d = sqrt(1 - <u,v>):
// (1 - cos alpha) / 2 = eps^2 / 2. Throws std::out_of_range outside [0, 1].
double ball_measure_s2(double eps);

// Monte Carlo estimates of the same measures: the fraction of Haar samples
// within eps of a fixed center, computed through metric_d.
double mc_ball_measure_s3(double eps, std::size_t n, std::uint64_t seed);
double mc_ball_measure_s2(double eps, std::size_t n, std::uint64_t seed);

}  // namespace gg
