#include "gg/words.hpp"

#include <algorithm>
#include <ostream>

namespace gg {

Quat gen_quat(Gen g) {
    switch (g) {
        case Gen::S1: return {1, 2, 0, 0};
        case Gen::S1Inv: return {1, -2, 0, 0};
        case Gen::S2: return {1, 0, 2, 0};
        case Gen::S2Inv: return {1, 0, -2, 0};
        case Gen::S3: return {1, 0, 0, 2};
        case Gen::S3Inv: return {1, 0, 0, -2};
    }
    return {};
}

Quat prefix_quat(Prefix p) {
    switch (p) {
        case Prefix::I: return {1, 0, 0, 0};
        case Prefix::X: return {0, 1, 0, 0};
        case Prefix::Y: return {0, 0, 1, 0};
        case Prefix::Z: return {0, 0, 0, 1};
    }
    return {};
}

Gen gen_inverse(Gen g) {
    auto v = static_cast<std::uint8_t>(g);
    return static_cast<Gen>(v ^ 1u);
}

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::S1: return "s1";
        case Gen::S1Inv: return "s1^-1";
        case Gen::S2: return "s2";
        case Gen::S2Inv: return "s2^-1";
        case Gen::S3: return "s3";
        case Gen::S3Inv: return "s3^-1";
    }
    return "?";
}

const char* prefix_name(Prefix p) {
    switch (p) {
        case Prefix::I: return "I";
        case Prefix::X: return "iX";
        case Prefix::Y: return "iY";
        case Prefix::Z: return "iZ";
    }
    return "?";
}

Prefix prefix_mul(Prefix p, Prefix q) {
    // Multiplication table of {1, i, j, k} mod sign.
    static constexpr Prefix table[4][4] = {
        {Prefix::I, Prefix::X, Prefix::Y, Prefix::Z},
        {Prefix::X, Prefix::I, Prefix::Z, Prefix::Y},
        {Prefix::Y, Prefix::Z, Prefix::I, Prefix::X},
        {Prefix::Z, Prefix::Y, Prefix::X, Prefix::I},
    };
    return table[static_cast<int>(p)][static_cast<int>(q)];
}

Gen conjugate_by(Prefix u, Gen g) {
    if (u == Prefix::I) return g;
    // Conjugation by i fixes 1 +- 2i and inverts the other two axes, etc.
    int axis = static_cast<int>(u);                    // 1 = i, 2 = j, 3 = k
    int gen_axis = static_cast<int>(g) / 2 + 1;        // 1, 2, 3
    return gen_axis == axis ? g : gen_inverse(g);
}

bool GateWord::operator<(const GateWord& o) const {
    if (prefix != o.prefix) return static_cast<int>(prefix) < static_cast<int>(o.prefix);
    return std::lexicographical_compare(body.begin(), body.end(), o.body.begin(), o.body.end());
}

std::string GateWord::str() const {
    std::string s;
    if (prefix != Prefix::I) s = prefix_name(prefix);
    for (Gen g : body) {
        if (!s.empty()) s += ' ';
        s += gen_name(g);
    }
    return s.empty() ? "e" : s;
}

GateWord reduce_word(std::span<const Symbol> seq) {
    GateWord w;
    for (const Symbol& sym : seq) {
        if (sym.is_prefix) {
            // Commute the unit to the front: P (B u) = (P u) (u^-1 B u).
            w.prefix = prefix_mul(w.prefix, sym.p);
            for (Gen& g : w.body) g = conjugate_by(sym.p, g);
        } else {
            if (!w.body.empty() && w.body.back() == gen_inverse(sym.g))
                w.body.pop_back();
            else
                w.body.push_back(sym.g);
        }
    }
    return w;
}

Quat evaluate_word(const GateWord& w) {
    Quat q = prefix_quat(w.prefix);
    for (Gen g : w.body) q = quat_mul(q, gen_quat(g));
    return q;
}

std::int64_t u_count(GateSet set, int t, int q) {
    if (t < 0) throw std::invalid_argument("u_count: t < 0");
    if (t > 26) throw std::overflow_error("u_count: t too large for int64");
    std::int64_t base = set == GateSet::S ? 1 : 4;
    if (t == 0) return base;
    std::int64_t p = 1;
    for (int i = 0; i < t - 1; ++i) p *= q;
    return base * (q + 1) * p;
}

std::int64_t v_count(GateSet set, int t, int q) {
    if (t < 0) throw std::invalid_argument("v_count: t < 0");
    if (t > 26) throw std::overflow_error("v_count: t too large for int64");
    std::int64_t base = set == GateSet::S ? 1 : 4;
    if (t == 0) return base;
    std::int64_t qt = 1;
    for (int i = 0; i < t; ++i) qt *= q;
    // (q+1)/(q-1) q^t - 2/(q-1), exactly divisible for q = 5
    return base * ((q + 1) * qt - 2) / (q - 1);
}

namespace {

struct WorkItem {
    Quat q;       // canonical
    Gen last;     // last body symbol
};

// Children of one BFS level, written to fixed slots so the result does not
// depend on the thread schedule.
std::vector<WorkItem> expand_level(const std::vector<WorkItem>& level, bool first) {
    const int branch = first ? 6 : 5;
    std::vector<WorkItem> next(level.size() * branch);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(level.size()); ++i) {
        const WorkItem& it = level[i];
        int slot = 0;
        for (int gi = 0; gi < kNumGens; ++gi) {
            Gen g = static_cast<Gen>(gi);
            if (!first && g == gen_inverse(it.last)) continue;
            Quat child = canonical(quat_mul(it.q, gen_quat(g)));
            next[i * branch + slot] = {child, g};
            ++slot;
        }
    }
    return next;
}

}  // namespace

std::vector<Shell> enumerate_shells(GateSet set, int t_max, EnumerationBudget budget) {
    if (t_max < 0) throw std::invalid_argument("enumerate_shells: t_max < 0");
    if (t_max > kMaxHeight) throw budget_error("enumerate_shells: t_max beyond height budget");

    std::vector<Shell> out;
    std::vector<WorkItem> level{{Quat{1, 0, 0, 0}, Gen::S1}};

    auto emit = [&](int t, const std::vector<WorkItem>& items) {
        Shell sh{set, t, {}};
        sh.elems.reserve(items.size() * (set == GateSet::T ? 4 : 1));
        for (const WorkItem& it : items) {
            if (set == GateSet::S) {
                sh.elems.push_back(it.q);
            } else {
                for (int p = 0; p < 4; ++p)
                    sh.elems.push_back(
                        canonical(quat_mul(prefix_quat(static_cast<Prefix>(p)), it.q)));
            }
        }
        std::sort(sh.elems.begin(), sh.elems.end());
        sh.elems.erase(std::unique(sh.elems.begin(), sh.elems.end()), sh.elems.end());
        out.push_back(std::move(sh));
    };

    emit(0, level);
    const std::int64_t coset = set == GateSet::T ? 4 : 1;
    for (int t = 1; t <= t_max; ++t) {
        if (static_cast<std::int64_t>(level.size()) * 6 * coset > budget.max_elements)
            throw budget_error("enumerate_shells: shell size exceeds budget at t=" +
                               std::to_string(t));
        std::vector<WorkItem> next = expand_level(level, t == 1);
        // Dedup guards against unexpected relations; the closed-form
        // comparison downstream turns any removal into a hard failure.
        std::sort(next.begin(), next.end(),
                  [](const WorkItem& a, const WorkItem& b) { return a.q < b.q; });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const WorkItem& a, const WorkItem& b) { return a.q == b.q; }),
                   next.end());
        emit(t, next);
        level = std::move(next);
    }
    return out;
}

void write_shells_csv(std::ostream& os, std::span<const Shell> shells) {
    os << "t,a,b,c,d\n";
    for (const Shell& sh : shells)
        for (const Quat& q : sh.elems)
            os << sh.t << ',' << q.a << ',' << q.b << ',' << q.c << ',' << q.d << '\n';
}

}  // namespace gg
