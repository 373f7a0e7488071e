#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gg {

using int128 = __int128;

// 5^t, exact for t <= 54.
constexpr int128 pow5(int t) {
    int128 v = 1;
    for (int i = 0; i < t; ++i) v *= 5;
    return v;
}

// Heights beyond this overflow the int64 coefficient budget.
inline constexpr int kMaxHeight = 40;

// Returns t if n = 5^t, otherwise -1.
constexpr int pow5_exponent(int128 n) {
    if (n <= 0) return -1;
    int t = 0;
    while (n % 5 == 0) {
        n /= 5;
        ++t;
    }
    return n == 1 ? t : -1;
}

inline std::string to_string_i128(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    std::string s;
    while (u > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

/// Integer (Lipschitz) quaternion a + b*i + c*j + d*k.
///
/// All arithmetic is exact. Multiplication is guarded so that products stay
/// within the int64 coefficient range whenever N(p)*N(q) <= 5^kMaxHeight.
struct Quat {
    std::int64_t a = 0, b = 0, c = 0, d = 0;

    friend constexpr bool operator==(const Quat&, const Quat&) = default;

    constexpr bool operator<(const Quat& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        if (c != o.c) return c < o.c;
        return d < o.d;
    }
};

constexpr Quat conj(const Quat& q) { return {q.a, -q.b, -q.c, -q.d}; }

constexpr Quat negate(const Quat& q) { return {-q.a, -q.b, -q.c, -q.d}; }

// N(q) = a^2 + b^2 + c^2 + d^2, exact in 128 bits.
constexpr int128 norm(const Quat& q) {
    auto sq = [](std::int64_t v) { return static_cast<int128>(v) * v; };
    return sq(q.a) + sq(q.b) + sq(q.c) + sq(q.d);
}

// Representative of {q, -q} with the first nonzero coefficient positive.
constexpr Quat canonical(const Quat& q) {
    std::int64_t lead = q.a != 0 ? q.a : q.b != 0 ? q.b : q.c != 0 ? q.c : q.d;
    return lead < 0 ? negate(q) : q;
}

// Hamilton product, using ij = k. Throws std::overflow_error when the product
// norm would exceed 5^kMaxHeight (coefficients then provably fit in int64).
inline Quat quat_mul(const Quat& p, const Quat& q) {
    const int128 np = norm(p), nq = norm(q);
    const int128 lim = pow5(kMaxHeight);
    if (np > lim || nq > lim || (nq > 0 && np > lim / nq))
        throw std::overflow_error("quat_mul: norm product exceeds 5^" + std::to_string(kMaxHeight));
    return {
        p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
        p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
        p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
        p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
    };
}

// gcd(a, b, c, d, 5) = 1; for norm 5^t this is exactly primitivity.
constexpr bool primitive_mod5(const Quat& q) {
    return q.a % 5 != 0 || q.b % 5 != 0 || q.c % 5 != 0 || q.d % 5 != 0;
}

constexpr bool divisible_by5(const Quat& q) {
    return q.a % 5 == 0 && q.b % 5 == 0 && q.c % 5 == 0 && q.d % 5 == 0;
}

constexpr Quat div5(const Quat& q) { return {q.a / 5, q.b / 5, q.c / 5, q.d / 5}; }

inline std::string to_string(const Quat& q) {
    return "(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," + std::to_string(q.c) +
           "," + std::to_string(q.d) + ")";
}

}  // namespace gg
