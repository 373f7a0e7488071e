#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gg/quat.hpp"

namespace gg {

enum class GateSet { S, T };

inline const char* to_string(GateSet s) { return s == GateSet::S ? "S" : "T"; }

// Weight-1 generators, in the fixed trial order used everywhere.
enum class Gen : std::uint8_t { S1, S1Inv, S2, S2Inv, S3, S3Inv };

// Weight-0 prefix units 1, i, j, k of PSU(2) (the latter three are the
// Pauli-type gates; signs are discarded).
enum class Prefix : std::uint8_t { I, X, Y, Z };

inline constexpr int kNumGens = 6;

Quat gen_quat(Gen g);        // e.g. S1 -> (1, 2, 0, 0)
Quat prefix_quat(Prefix p);  // I, i, j, k
Gen gen_inverse(Gen g);
const char* gen_name(Gen g);
const char* prefix_name(Prefix p);

// Product in the unit group mod sign: X * Y = Z, X * X = I, ...
Prefix prefix_mul(Prefix p, Prefix q);

// u^-1 g u for a prefix unit u; permutes the generator set mod sign.
Gen conjugate_by(Prefix u, Gen g);

// One symbol of the free input alphabet for reduce_word.
struct Symbol {
    bool is_prefix = false;
    Prefix p = Prefix::I;
    Gen g = Gen::S1;

    static Symbol gen(Gen g) { return {false, Prefix::I, g}; }
    static Symbol pauli(Prefix p) { return {true, p, Gen::S1}; }
};

/// Reduced word: a single prefix followed by a body with no adjacent
/// inverse pair. Height equals the body length (prefixes weigh 0).
struct GateWord {
    Prefix prefix = Prefix::I;
    std::vector<Gen> body;

    int height() const { return static_cast<int>(body.size()); }

    friend bool operator==(const GateWord&, const GateWord&) = default;
    // Lexicographic: prefix first, then body tags.
    bool operator<(const GateWord& o) const;

    std::string str() const;  // e.g. "iX s1 s2^-1", "e" for the identity
};

// Normalizes an arbitrary symbol sequence: prefixes commute to the front
// (conjugating the generators they pass), inverse pairs cancel.
GateWord reduce_word(std::span<const Symbol> seq);

// Exact integer evaluation; the result has norm 5^height.
Quat evaluate_word(const GateWord& w);

/// All elements of height exactly t, as canonical quaternions sorted
/// lexicographically. For T the four prefix cosets are merged in.
struct Shell {
    GateSet set = GateSet::S;
    int t = 0;
    std::vector<Quat> elems;
};

struct EnumerationBudget {
    std::int64_t max_elements = 20'000'000;
};

// Breadth-first over reduced words with last-symbol tracking (x5 branching).
// Duplicates would signal an unexpected relation: they are removed and show
// up as a count mismatch against the closed forms. Throws budget_error when
// a shell would exceed the budget.
std::vector<Shell> enumerate_shells(GateSet set, int t_max,
                                    EnumerationBudget budget = {});

// Closed-form counts: |U(t)| and |V(t)| for S, the Omega analogues for T.
// q = 5 is the configured prime; only its generator tables ship.
std::int64_t u_count(GateSet set, int t, int q = 5);
std::int64_t v_count(GateSet set, int t, int q = 5);

// "t,a,b,c,d" rows, sign-canonical, sorted; bit-exact across runs.
void write_shells_csv(std::ostream& os, std::span<const Shell> shells);

struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gg
