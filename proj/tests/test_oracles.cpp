#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "tight/oracles.hpp"
#include "tight/sieve.hpp"

using namespace tight;

TEST_CASE("residue presets are clean at 1e4") {
    CHECK(check_residue_claim(ResiduePreset::P113, 10000).empty());
    CHECK(check_residue_claim(ResiduePreset::P223, 10000).empty());
    CHECK(check_residue_claim(ResiduePreset::P334AB, 10000).empty());
}

TEST_CASE("residue preset hypotheses actually bite") {
    // neither ternary form is universal, and everything each one misses
    // falls in its excluded residue class
    GonalSet tri(3, false);
    auto m113 = repr_set(FormVector{1, 1, 3}, tri, 2000).missing(0, 2000);
    CHECK_FALSE(m113.empty());
    for (int64_t g : m113) {
        CHECK(g % 3 == 2);
        CHECK_FALSE(brute::represents({1, 1, 3}, 3, false, g));
    }
    auto m223 = repr_set(FormVector{2, 2, 3}, tri, 2000).missing(0, 2000);
    CHECK_FALSE(m223.empty());
    for (int64_t g : m223) CHECK(g % 3 == 1);
}

TEST_CASE("preset oracle agrees with per-value exhaustive search") {
    // the bulk table for the odd-square preset matches odd_square_repr
    for (int64_t v = 10; v <= 600; ++v) {
        bool hyp = (v % 3 == 1 || v % 9 == 3 || v % 9 == 6) && v % 8 == 2;
        if (!hyp) continue;
        CHECK(odd_square_repr({3, 3, 4}, v).has_value());
    }
}

TEST_CASE("check_346") {
    // 13 = 3 + 4 + 6 satisfies the hypothesis and is represented
    CHECK(check_346(13).empty());
    // 5 is outside the hypothesis (5 = 2 mod 3, not a multiple of 9), so it
    // never shows up as a counterexample even though it is not represented
    auto bad = check_346(5);
    CHECK(bad.empty());
    CHECK(check_346(20000).empty());
}

TEST_CASE("jones_check examples") {
    CHECK(jones_check(2, 3, 9));   // (1,2): 1 + 8 = 9, gcd(1,2,3) = 1
    CHECK(jones_check(1, 5, 25));  // (3,4): 9 + 16 = 25, gcd(3,4,5) = 1
    CHECK_THROWS_AS(jones_check(2, 5, 10), HypothesisFailed); // x^2+2y^2=5 unsolvable
}

TEST_CASE("jones_check exhaustive on a small grid") {
    auto is_prime = [](int64_t p) {
        if (p < 2) return false;
        for (int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    for (int64_t k = 1; k <= 10; ++k) {
        for (int64_t p = 3; p <= 50; p += 2) {
            if (!is_prime(p) || k % p == 0) continue;
            bool hypothesis_ok = true;
            try {
                jones_check(k, p, 1);
            } catch (const HypothesisFailed&) {
                hypothesis_ok = false;
            }
            if (!hypothesis_ok) continue;
            for (int64_t N = 1; N <= 2000; ++N) CHECK(jones_check(k, p, N));
        }
    }
}

TEST_CASE("polynomial identities hold on random inputs") {
    for (Identity id :
         {Identity::Id346Case9, Identity::Id346Case1, Identity::Id468}) {
        CHECK(identity_check(id, 10000, 12345));
        CHECK(identity_check(id, 1000, 999)); // different seed
    }
    CHECK_THROWS_AS(identity_from_name("id-nope"), UnknownIdentity);
    CHECK(identity_from_name("id-468") == Identity::Id468);
}

TEST_CASE("a deliberately broken identity fails fast") {
    // guard against the checker trivially returning true: evaluate the
    // id-468 left side against a perturbed right side by hand
    std::vector<std::tuple<int64_t, int64_t, int64_t>> pts{{1, 1, 1}, {2, 0, 1}};
    for (auto [x, y, z] : pts) {
        int64_t lhs = 2 * (y - 3 * x) * (y - 3 * x) + 4 * y * y + 24 * z * z;
        int64_t rhs = 4 * (x + 2 * z) * (x + 2 * z) + 6 * (x - y) * (x - y) +
                      8 * (x - z) * (x - z);
        CHECK(lhs == rhs);
        CHECK(lhs != rhs + 2);
    }
}

TEST_CASE("d-selection tables") {
    CHECK(check_dselect(DSelect::X3, 100000).empty());
    CHECK(check_dselect(DSelect::Y3, 100000).empty());
}
