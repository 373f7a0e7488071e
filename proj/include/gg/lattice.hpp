#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gg/quat.hpp"
#include "gg/words.hpp"

namespace gg {

/// Integer solutions of a^2 + b^2 + c^2 + d^2 = n, one canonical
/// representative per {v, -v} pair, sorted lexicographically.
struct LatticeShell {
    std::int64_t n = 0;
    bool primitive_only = false;
    std::vector<Quat> points;
};

inline constexpr std::int64_t kNuBudget = 244'140'625;  // 5^12

// Exhaustive enumeration by nested loops with an exact integer square root
// for the last coordinate. primitive_only keeps gcd(a,b,c,d,5) = 1.
// Throws budget_error for n outside [1, kNuBudget].
LatticeShell enumerate_nu(std::int64_t n, bool primitive_only);

// Single-threaded reference; must produce identical output.
LatticeShell enumerate_nu_serial(std::int64_t n, bool primitive_only);

// Jacobi's four-square count r4(n) = 8 * sum of divisors of n not divisible
// by 4. |nu(n)| above equals r4(n) / 2.
std::int64_t jacobi_r4(std::int64_t n);

// Floor square root, exact for 0 <= n < 2^62.
std::int64_t isqrt64(std::int64_t n);

// Same "t,a,b,c,d" format as the word-group shell export, so the two
// routes can be diffed by external tools. Requires n = 5^t.
void write_nu_csv(std::ostream& os, const LatticeShell& shell);

/// Outcome of comparing evaluated words of height <= t against the union of
/// primitive four-square shells 5^h, h <= t, both sides sign-canonical.
struct BijectionReport {
    int t = 0;
    bool equal = false;
    std::vector<std::int64_t> word_shell_sizes;     // per h = 0..t
    std::vector<std::int64_t> lattice_shell_sizes;  // per h = 0..t
    std::vector<Quat> only_words;                   // first few offenders
    std::vector<Quat> only_lattice;

    std::string summary() const;
};

BijectionReport bijection_check(int t);

// Writes the word w with evaluate_word(w) = p up to sign, height = t where
// N(p) = 5^t. Repeatedly right-divides by the unique norm-5 generator whose
// conjugate clears all coefficients mod 5; trial order is fixed (s1, s1^-1,
// s2, s2^-1, s3, s3^-1) so the result is deterministic.
// Throws std::invalid_argument unless N(p) is a power of 5 and p is
// primitive (gcd with 5 equal 1).
GateWord exact_synthesis(const Quat& p);

}  // namespace gg
