#include "doctest.h"

#include <random>
#include <set>
#include <sstream>

#include "gg/lattice.hpp"

using namespace gg;

TEST_CASE("integer square root") {
    CHECK(isqrt64(0) == 0);
    CHECK(isqrt64(1) == 1);
    CHECK(isqrt64(24) == 4);
    CHECK(isqrt64(25) == 5);
    CHECK(isqrt64(26) == 5);
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> big(0, 4'000'000'000'000'000LL);
    for (int i = 0; i < 1000; ++i) {
        std::int64_t n = big(rng);
        std::int64_t s = isqrt64(n);
        CHECK(s * s <= n);
        CHECK((s + 1) * (s + 1) > n);
    }
}

TEST_CASE("four-square shells on small norms") {
    LatticeShell one = enumerate_nu(1, false);
    std::vector<Quat> units = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    CHECK(one.points == units);

    CHECK(enumerate_nu(5, false).points.size() == 24);
    CHECK(enumerate_nu(25, true).points.size() == 120);
}

TEST_CASE("enumeration count matches Jacobi's formula for n = 1..50") {
    for (std::int64_t n = 1; n <= 50; ++n)
        CHECK(2 * static_cast<std::int64_t>(enumerate_nu(n, false).points.size()) ==
              jacobi_r4(n));
}

TEST_CASE("serial and parallel enumeration agree") {
    for (std::int64_t n : {50LL, 123LL, 3125LL, 15625LL}) {
        LatticeShell a = enumerate_nu(n, false);
        LatticeShell b = enumerate_nu_serial(n, false);
        CHECK(a.points == b.points);
    }
}

TEST_CASE("primitive shell sizes satisfy the five-scaling identity") {
    // nu(5^t) = primitive nu(5^t) + 5 * nu(5^{t-2}) as canonical point sets
    for (int t = 2; t <= 6; ++t) {
        auto full = enumerate_nu(static_cast<std::int64_t>(pow5(t)), false);
        auto prim = enumerate_nu(static_cast<std::int64_t>(pow5(t)), true);
        auto lower = enumerate_nu(static_cast<std::int64_t>(pow5(t - 2)), false);
        CHECK(full.points.size() == prim.points.size() + lower.points.size());
    }
}

TEST_CASE("points are canonical, sorted and on the right sphere") {
    auto shell = enumerate_nu(625, true);
    CHECK(std::is_sorted(shell.points.begin(), shell.points.end()));
    for (const Quat& q : shell.points) {
        CHECK(norm(q) == 625);
        CHECK(q == canonical(q));
        CHECK(primitive_mod5(q));
    }
    std::set<Quat> uniq(shell.points.begin(), shell.points.end());
    CHECK(uniq.size() == shell.points.size());
}

TEST_CASE("primitive shell sizes equal the height-shell counts") {
    for (int t = 0; t <= 6; ++t)
        CHECK(static_cast<std::int64_t>(
                  enumerate_nu(static_cast<std::int64_t>(pow5(t)), true).points.size()) ==
              u_count(GateSet::T, t));
}

TEST_CASE("lattice csv matches the word-shell export") {
    auto nu = enumerate_nu(25, true);
    std::ostringstream csv;
    write_nu_csv(csv, nu);
    auto shells = enumerate_shells(GateSet::T, 2);
    std::ostringstream words;
    write_shells_csv(words, {&shells[2], 1});
    CHECK(csv.str() == words.str());
    LatticeShell odd = enumerate_nu(7, false);
    CHECK_THROWS_AS(write_nu_csv(csv, odd), std::invalid_argument);
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(enumerate_nu(kNuBudget + 1, false), budget_error);
    CHECK_THROWS_AS(enumerate_nu(0, false), budget_error);
}

TEST_CASE("bijection between words and lattice shells") {
    BijectionReport rep = bijection_check(3);
    CHECK(rep.equal);
    CHECK(rep.word_shell_sizes == std::vector<std::int64_t>{4, 24, 120, 600});
    std::int64_t total = 0;
    for (auto s : rep.lattice_shell_sizes) total += s;
    CHECK(total == 748);

    BijectionReport zero = bijection_check(0);
    CHECK(zero.equal);
    CHECK(zero.word_shell_sizes == std::vector<std::int64_t>{4});
}

TEST_CASE("exact synthesis of the generator points") {
    GateWord w = exact_synthesis({1, 2, 0, 0});
    CHECK(w.prefix == Prefix::I);
    CHECK(w.body == std::vector<Gen>{Gen::S1});

    w = exact_synthesis({-2, 1, 0, 0});
    CHECK(w.prefix == Prefix::X);
    CHECK(w.body == std::vector<Gen>{Gen::S1});

    w = exact_synthesis({1, 0, 0, 0});
    CHECK(w.prefix == Prefix::I);
    CHECK(w.height() == 0);
}

TEST_CASE("exact synthesis rejects bad inputs") {
    CHECK_THROWS_AS(exact_synthesis({1, 1, 0, 0}), std::invalid_argument);   // norm 2
    CHECK_THROWS_AS(exact_synthesis({5, 0, 0, 0}), std::invalid_argument);   // imprimitive
    CHECK_THROWS_AS(exact_synthesis({0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("synthesis round-trips random reduced words") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> pick(0, 5), pre(0, 3), len(0, 8);
    for (int it = 0; it < 300; ++it) {
        GateWord w;
        w.prefix = static_cast<Prefix>(pre(rng));
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            Gen g = static_cast<Gen>(pick(rng));
            while (!w.body.empty() && g == gen_inverse(w.body.back()))
                g = static_cast<Gen>(pick(rng));
            w.body.push_back(g);
        }
        Quat q = evaluate_word(w);
        GateWord back = exact_synthesis(q);
        CHECK(back.height() == w.height());
        CHECK(canonical(evaluate_word(back)) == canonical(q));
        // reduced words are unique, so the synthesis recovers w itself
        CHECK(back == w);
    }
}
