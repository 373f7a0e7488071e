#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "gg/quat.hpp"

namespace gg {

using Vec4 = std::array<double, 4>;

inline double dot4(const Vec4& x, const Vec4& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

inline Vec4 canonical_vec(Vec4 v) {
    for (double x : v) {
        if (x != 0.0) {
            if (x < 0.0)
                for (double& c : v) c = -c;
            break;
        }
    }
    return v;
}

// Hamilton product on real 4-vectors, same convention as quat_mul.
inline Vec4 mul4(const Vec4& p, const Vec4& q) {
    return {
        p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
        p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
        p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
        p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0],
    };
}

inline Vec4 conj4(const Vec4& q) { return {q[0], -q[1], -q[2], -q[3]}; }

/// Point of PSU(2): a unit 4-vector stored with the first nonzero coordinate
/// positive, identifying v with -v.
class Psu2Point {
  public:
    Psu2Point() : x_{1.0, 0.0, 0.0, 0.0} {}

    // Requires a unit vector (1e-12 tolerance); stores the canonical sign.
    explicit Psu2Point(const Vec4& v) : x_(canonical_vec(v)) {
        if (std::fabs(dot4(x_, x_) - 1.0) > 1e-12)
            throw std::invalid_argument("Psu2Point: not a unit vector");
    }

    // Normalizes an arbitrary nonzero vector.
    static Psu2Point from_raw(const Vec4& v) {
        double n = std::sqrt(dot4(v, v));
        if (n == 0.0) throw std::invalid_argument("Psu2Point: zero vector");
        return Psu2Point({v[0] / n, v[1] / n, v[2] / n, v[3] / n});
    }

    static Psu2Point from_quat(const Quat& q) {
        double n = std::sqrt(static_cast<double>(norm(q)));
        if (n == 0.0) throw std::invalid_argument("Psu2Point: zero quaternion");
        return Psu2Point({q.a / n, q.b / n, q.c / n, q.d / n});
    }

    const Vec4& coords() const { return x_; }
    double operator[](int i) const { return x_[i]; }

    friend bool operator==(const Psu2Point& u, const Psu2Point& v) { return u.x_ == v.x_; }

  private:
    Vec4 x_;
};

// d(x, y) = sqrt(1 - |<x, y>|), the bi-invariant metric with range [0, 1].
// Equals sqrt(1 - |trace(X* Y)| / 2) of the matrix forms. Radicands within
// a few ulps of zero collapse to zero, so a self-query reports exactly 0.
inline double metric_d(const Vec4& x, const Vec4& y) {
    double t = 1.0 - std::fabs(dot4(x, y));
    return t > 5e-16 ? std::sqrt(t) : 0.0;
}

inline double metric_d(const Psu2Point& x, const Psu2Point& y) {
    return metric_d(x.coords(), y.coords());
}

// Integer-friendly proximity test: for x scaled to |x| = 5^{t/2} and an
// integer y with N(y) = 5^t, d(x/|x|, y/|y|) < eps iff |<x, y>| > 5^t (1 - eps^2).
inline bool proximity_threshold(const Vec4& x_scaled, const Quat& y, double eps) {
    int t = pow5_exponent(norm(y));
    if (t < 0) throw std::invalid_argument("proximity_threshold: N(y) is not a power of 5");
    double ip = x_scaled[0] * y.a + x_scaled[1] * y.b + x_scaled[2] * y.c + x_scaled[3] * y.d;
    double p5t = static_cast<double>(pow5(t));
    // |ip| > 5^t (1 - eps^2), written so tiny eps cannot round away
    return p5t - std::fabs(ip) < p5t * eps * eps;
}

/// 2x2 special unitary matrix, row-major entries m[0] m[1] / m[2] m[3].
struct Su2Matrix {
    std::array<std::complex<double>, 4> m;

    std::complex<double> det() const { return m[0] * m[3] - m[1] * m[2]; }

    bool is_special_unitary(double tol = 1e-12) const {
        using std::abs;
        // rows orthonormal and det = 1
        std::complex<double> r00 = m[0] * std::conj(m[0]) + m[1] * std::conj(m[1]);
        std::complex<double> r11 = m[2] * std::conj(m[2]) + m[3] * std::conj(m[3]);
        std::complex<double> r01 = m[0] * std::conj(m[2]) + m[1] * std::conj(m[3]);
        return abs(r00 - 1.0) <= tol && abs(r11 - 1.0) <= tol && abs(r01) <= tol &&
               abs(det() - 1.0) <= tol;
    }
};

inline Su2Matrix mat_mul(const Su2Matrix& p, const Su2Matrix& q) {
    return {{p.m[0] * q.m[0] + p.m[1] * q.m[2], p.m[0] * q.m[1] + p.m[1] * q.m[3],
             p.m[2] * q.m[0] + p.m[3] * q.m[2], p.m[2] * q.m[1] + p.m[3] * q.m[3]}};
}

// (x1, x2, x3, x4) -> ((x1 + x2 i, x3 + x4 i), (-x3 + x4 i, x1 - x2 i)).
// This map is a homomorphism from unit quaternions onto SU(2).
inline Su2Matrix to_su2(const Vec4& v) {
    using C = std::complex<double>;
    return {{C(v[0], v[1]), C(v[2], v[3]), C(-v[2], v[3]), C(v[0], -v[1])}};
}

inline Su2Matrix to_su2(const Psu2Point& p) { return to_su2(p.coords()); }

inline Su2Matrix to_su2(const Quat& q) {
    double n = std::sqrt(static_cast<double>(norm(q)));
    return to_su2(Vec4{q.a / n, q.b / n, q.c / n, q.d / n});
}

inline Psu2Point from_su2(const Su2Matrix& m) {
    if (!m.is_special_unitary()) throw std::invalid_argument("from_su2: not special unitary");
    return Psu2Point({m.m[0].real(), m.m[0].imag(), m.m[1].real(), m.m[1].imag()});
}

/// 3x3 rotation matrix, row-major.
struct Rotation3 {
    std::array<double, 9> r;

    double operator()(int i, int j) const { return r[3 * i + j]; }
};

inline Rotation3 rot_mul(const Rotation3& p, const Rotation3& q) {
    Rotation3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += p(i, k) * q(k, j);
            out.r[3 * i + j] = s;
        }
    return out;
}

// Adjoint action of a unit quaternion on its imaginary part: the standard
// double cover SU(2) -> SO(3). Sign-blind, so it is well defined on PSU(2).
inline Rotation3 to_so3(const Psu2Point& p) {
    double w = p[0], x = p[1], y = p[2], z = p[3];
    return {{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
             2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
             2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
}

}  // namespace gg
