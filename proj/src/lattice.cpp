#include "gg/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace gg {

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt64: negative");
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

std::int64_t jacobi_r4(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("jacobi_r4: n < 1");
    std::int64_t sum = 0;
    for (std::int64_t i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        if (i % 4 != 0) sum += i;
        std::int64_t j = n / i;
        if (j != i && j % 4 != 0) sum += j;
    }
    return 8 * sum;
}

namespace {

// All (c, d) completions of c^2 + d^2 = rem for the canonically signed
// prefix (a, b); scans c >= 0 and mirrors.
inline void complete_pair(std::int64_t a, std::int64_t b, std::int64_t rem, bool primitive_only,
                          std::vector<Quat>& out) {
    std::int64_t cmax = isqrt64(rem);
    for (std::int64_t c = 0; c <= cmax; ++c) {
        std::int64_t rc = rem - c * c;
        std::int64_t s = isqrt64(rc);
        if (s * s != rc) continue;
        for (int ci = 0; ci < (c > 0 ? 2 : 1); ++ci) {
            std::int64_t cc = ci == 0 ? c : -c;
            for (int di = 0; di < (s > 0 ? 2 : 1); ++di) {
                Quat q{a, b, cc, di == 0 ? s : -s};
                if (primitive_only && divisible_by5(q)) continue;
                out.push_back(q);
            }
        }
    }
}

// The a = 0 boundary cases, where canonical sign constrains later coords.
void enumerate_zero_a(std::int64_t n, bool primitive_only, std::vector<Quat>& out) {
    std::int64_t bmax = isqrt64(n);
    for (std::int64_t b = 1; b <= bmax; ++b) complete_pair(0, b, n - b * b, primitive_only, out);
    for (std::int64_t c = 1; c * c <= n; ++c) {
        std::int64_t rc = n - c * c;
        std::int64_t s = isqrt64(rc);
        if (s * s != rc) continue;
        for (int di = 0; di < (s > 0 ? 2 : 1); ++di) {
            Quat q{0, 0, c, di == 0 ? s : -s};
            if (primitive_only && divisible_by5(q)) continue;
            out.push_back(q);
        }
    }
    std::int64_t s = isqrt64(n);
    if (s * s == n) {
        Quat q{0, 0, 0, s};
        if (!(primitive_only && divisible_by5(q))) out.push_back(q);
    }
}

LatticeShell enumerate_nu_impl(std::int64_t n, bool primitive_only,
                               [[maybe_unused]] bool parallel) {
    if (n < 1 || n > kNuBudget)
        throw budget_error("enumerate_nu: n outside [1, 5^12]");

    const std::int64_t amax = isqrt64(n);
    std::vector<std::vector<Quat>> per_a(static_cast<std::size_t>(amax) + 1);

#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::int64_t a = 1; a <= amax; ++a) {
        std::int64_t ra = n - a * a;
        std::int64_t bmax = isqrt64(ra);
        auto& bucket = per_a[static_cast<std::size_t>(a)];
        for (std::int64_t b = -bmax; b <= bmax; ++b)
            complete_pair(a, b, ra - b * b, primitive_only, bucket);
    }

    LatticeShell shell{n, primitive_only, {}};
    enumerate_zero_a(n, primitive_only, shell.points);
    for (auto& bucket : per_a)
        shell.points.insert(shell.points.end(), bucket.begin(), bucket.end());
    std::sort(shell.points.begin(), shell.points.end());
    return shell;
}

}  // namespace

LatticeShell enumerate_nu(std::int64_t n, bool primitive_only) {
    return enumerate_nu_impl(n, primitive_only, true);
}

LatticeShell enumerate_nu_serial(std::int64_t n, bool primitive_only) {
    return enumerate_nu_impl(n, primitive_only, false);
}

void write_nu_csv(std::ostream& os, const LatticeShell& shell) {
    int t = pow5_exponent(shell.n);
    if (t < 0) throw std::invalid_argument("write_nu_csv: n is not a power of 5");
    os << "t,a,b,c,d\n";
    for (const Quat& q : shell.points)
        os << t << ',' << q.a << ',' << q.b << ',' << q.c << ',' << q.d << '\n';
}

std::string BijectionReport::summary() const {
    std::string s = "t=" + std::to_string(t) + (equal ? " equal" : " MISMATCH");
    for (std::size_t h = 0; h < word_shell_sizes.size(); ++h)
        s += "\n  h=" + std::to_string(h) + ": words " + std::to_string(word_shell_sizes[h]) +
             ", lattice " + std::to_string(lattice_shell_sizes[h]);
    return s;
}

BijectionReport bijection_check(int t) {
    if (t < 0) throw std::invalid_argument("bijection_check: t < 0");
    BijectionReport rep;
    rep.t = t;
    rep.equal = true;

    std::vector<Shell> shells = enumerate_shells(GateSet::T, t);
    for (int h = 0; h <= t; ++h) {
        LatticeShell nu = enumerate_nu(static_cast<std::int64_t>(pow5(h)), true);
        const auto& words = shells[static_cast<std::size_t>(h)].elems;
        rep.word_shell_sizes.push_back(static_cast<std::int64_t>(words.size()));
        rep.lattice_shell_sizes.push_back(static_cast<std::int64_t>(nu.points.size()));
        if (words == nu.points) continue;
        rep.equal = false;
        std::vector<Quat> diff;
        std::set_difference(words.begin(), words.end(), nu.points.begin(), nu.points.end(),
                            std::back_inserter(diff));
        for (std::size_t i = 0; i < diff.size() && rep.only_words.size() < 10; ++i)
            rep.only_words.push_back(diff[i]);
        diff.clear();
        std::set_difference(nu.points.begin(), nu.points.end(), words.begin(), words.end(),
                            std::back_inserter(diff));
        for (std::size_t i = 0; i < diff.size() && rep.only_lattice.size() < 10; ++i)
            rep.only_lattice.push_back(diff[i]);
    }
    return rep;
}

GateWord exact_synthesis(const Quat& p) {
    int t = pow5_exponent(norm(p));
    if (t < 0) throw std::invalid_argument("exact_synthesis: N(p) is not a power of 5");
    if (!primitive_mod5(p)) throw std::invalid_argument("exact_synthesis: p is not primitive");

    Quat cur = p;
    std::vector<Gen> stripped;  // last generator first
    for (int step = t; step > 0; --step) {
        bool found = false;
        for (int gi = 0; gi < kNumGens; ++gi) {
            Gen g = static_cast<Gen>(gi);
            Quat r = quat_mul(cur, conj(gen_quat(g)));
            if (!divisible_by5(r)) continue;
            cur = div5(r);
            if (norm(cur) != pow5(step - 1))
                throw std::logic_error("exact_synthesis: norm did not drop by 5");
            stripped.push_back(g);
            found = true;
            break;
        }
        if (!found)
            throw std::logic_error("exact_synthesis: no divisible generator for " + to_string(cur));
    }

    GateWord w;
    Quat u = canonical(cur);
    if (u == Quat{1, 0, 0, 0})
        w.prefix = Prefix::I;
    else if (u == Quat{0, 1, 0, 0})
        w.prefix = Prefix::X;
    else if (u == Quat{0, 0, 1, 0})
        w.prefix = Prefix::Y;
    else if (u == Quat{0, 0, 0, 1})
        w.prefix = Prefix::Z;
    else
        throw std::logic_error("exact_synthesis: residue is not a unit");
    w.body.assign(stripped.rbegin(), stripped.rend());
    return w;
}

}  // namespace gg
