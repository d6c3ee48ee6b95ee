#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hoflab/sequences.hpp"

using namespace hoflab;
using namespace hoflab::seq;

namespace {

// Source-text tables, n = 0..18 (L, U from n = 1).
const std::vector<std::int64_t> kTableG = {0, 1, 1, 2, 3, 3, 4, 4, 5, 6,
                                           6, 7, 8, 8, 9, 9, 10, 11, 11};
const std::vector<std::int64_t> kTableL = {1,  3,  4,  6,  8,  9,  11, 12, 14,
                                           16, 17, 19, 21, 22, 24, 25, 27, 29};
const std::vector<std::int64_t> kTableU = {2,  5,  7,  10, 13, 15, 18, 20, 23,
                                           26, 28, 31, 34, 36, 39, 41, 44, 47};
const std::vector<std::int64_t> kTableW = {0,  2, 1,  5,  7, 3,  10, 4,  13, 15,
                                           6, 18, 20, 8, 23, 9, 26, 28, 11};

}  // namespace

TEST_CASE("Hofstadter G: closed form, recursion, and the printed table") {
    HofstadterG rec;
    for (std::size_t n = 0; n < kTableG.size(); ++n) {
        CHECK(hof_g_closed(static_cast<std::int64_t>(n)) == kTableG[n]);
        CHECK(rec.at(static_cast<std::int64_t>(n)) == kTableG[n]);
    }
    CHECK(rec.at(12) == 8);
    CHECK(rec.at(18) == 11);
    CHECK_THROWS_AS(hof_g_closed(-1), std::invalid_argument);
    for (std::int64_t n = 0; n <= 100000; ++n) CHECK(rec.at(n) == hof_g_closed(n));
}

TEST_CASE("G increments are 0 or 1") {
    for (std::int64_t n = 1; n <= 100000; ++n) {
        const std::int64_t d = hof_g_closed(n) - hof_g_closed(n - 1);
        CHECK(d >= 0);
        CHECK(d <= 1);
    }
}

TEST_CASE("Wythoff sequences against the printed table and U = L + n") {
    for (std::size_t i = 0; i < kTableL.size(); ++i) {
        const auto n = static_cast<std::int64_t>(i + 1);
        CHECK(wythoff_lower(n) == kTableL[i]);
        CHECK(wythoff_upper(n) == kTableU[i]);
    }
    CHECK(wythoff_lower(7) == 11);
    CHECK(wythoff_upper(13) == 34);
    for (std::int64_t n = 1; n <= 20000; ++n)
        CHECK(wythoff_upper(n) == wythoff_lower(n) + n);
    CHECK_THROWS_AS(wythoff_lower(0), std::invalid_argument);
    CHECK_THROWS_AS(wythoff_upper(0), std::invalid_argument);
}

TEST_CASE("swap sequence table and both routes") {
    for (std::size_t n = 0; n < kTableW.size(); ++n)
        CHECK(wythoff_swap(static_cast<std::int64_t>(n)) == kTableW[n]);
    CHECK(wythoff_swap(3) == 5);
    CHECK(wythoff_swap(8) == 13);
    CHECK(wythoff_swap(15) == 9);
    for (std::int64_t n = 1; n <= 100000; ++n)
        CHECK(wythoff_swap(n) == wythoff_swap_partner(n));
}

TEST_CASE("swap is an involution and swaps the Wythoff pair") {
    for (std::int64_t n = 1; n <= 100000; ++n) {
        CHECK(wythoff_swap(wythoff_swap(n)) == n);
        CHECK(wythoff_swap(wythoff_lower(n)) == wythoff_upper(n));
        CHECK(wythoff_swap(wythoff_upper(n)) == wythoff_lower(n));
    }
}

TEST_CASE("averaged swap equals G with exact divisibility") {
    SwapAverage avg;
    CHECK(avg.at(0) == 0);
    CHECK(avg.at(4) == 3);
    CHECK(avg.at(16) == 10);
    for (std::size_t n = 0; n < kTableG.size(); ++n)
        CHECK(avg.at(static_cast<std::int64_t>(n)) == kTableG[n]);
    for (std::int64_t n = 0; n <= 20000; ++n) CHECK(avg.at(n) == hof_g_closed(n));
}

TEST_CASE("recurrence (n+1)Wavg(n) - nWavg(n-1) = W(n)") {
    SwapAverage avg;
    for (std::int64_t n = 1; n <= 100000; ++n)
        CHECK((n + 1) * avg.at(n) - n * avg.at(n - 1) == wythoff_swap(n));
}

TEST_CASE("Wavg(n) = L(n+1) - (n+1)") {
    SwapAverage avg;
    for (std::int64_t n = 0; n <= 100000; ++n)
        CHECK(avg.at(n) == wythoff_lower(n + 1) - (n + 1));
}

TEST_CASE("greedy f spec values and the swap relation") {
    GreedyF f;
    CHECK(f.at(1) == 1);
    CHECK(f.at(2) == 3);
    CHECK(f.at(3) == 2);
    CHECK_THROWS_AS(f.at(0), std::invalid_argument);
    GreedyF f2;
    for (std::int64_t n = 1; n <= 20000; ++n)
        CHECK(wythoff_swap(n) == f2.at(n + 1) - 1);
}

TEST_CASE("greedy f is injective and its prefix sums divide") {
    GreedyF f;
    std::vector<bool> seen(70000, false);
    std::int64_t sum = 0;
    for (std::int64_t n = 1; n <= 20000; ++n) {
        const std::int64_t v = f.at(n);
        REQUIRE(v >= 1);
        REQUIRE(v < static_cast<std::int64_t>(seen.size()));
        CHECK_FALSE(seen[static_cast<std::size_t>(v)]);
        seen[static_cast<std::size_t>(v)] = true;
        sum += v;
        CHECK(sum % n == 0);
    }
}

TEST_CASE("greedy z and m spec values") {
    GreedyZ g;
    CHECK(g.z(1) == 1);
    CHECK(g.z(2) == 3);
    CHECK(g.z(3) == 5);
    CHECK(g.z(4) == 2);
    CHECK(g.z(5) == 8);
    CHECK(g.m(1) == 0);  // displayed definition: empty sum over n+1
    CHECK(g.m(2) == 1);
    CHECK_THROWS_AS(g.z(0), std::invalid_argument);
    // congruence and the unused-value property
    GreedyZ g2;
    std::vector<bool> seen(70000, false);
    std::int64_t sum = 0;
    for (std::int64_t n = 1; n <= 20000; ++n) {
        const std::int64_t v = g2.z(n);
        REQUIRE(v >= 1);
        CHECK_FALSE(seen[static_cast<std::size_t>(v)]);
        seen[static_cast<std::size_t>(v)] = true;
        sum += v;
        CHECK(sum % (n + 1) == 1);
    }
}

TEST_CASE("married functions: initial values, spec examples, b = m") {
    MarriedPair mp;
    CHECK(mp.a(0) == 1);
    CHECK(mp.b(0) == 0);
    CHECK(mp.a(2) == 2);
    CHECK(mp.b(1) == 0);
    CHECK(mp.b(9) == 6);
    GreedyZ g;
    for (std::int64_t n = 1; n <= 100000; ++n) CHECK(mp.b(n) == g.m(n));
}

TEST_CASE("Celaya-Ruskey family: table prefix, closed form, k=1 is G") {
    CelayaRuskeyH h1(1);
    for (std::size_t n = 0; n < kTableG.size(); ++n)
        CHECK(h1.at(static_cast<std::int64_t>(n)) == kTableG[n]);
    CHECK(h1.at(12) == 8);

    CelayaRuskeyH h2(2);
    const std::vector<std::int64_t> pell = {0, 0, 1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 5,
                                            5, 6, 6, 7, 7, 7, 8, 8, 9, 9, 9, 10, 10};
    for (std::size_t n = 0; n < pell.size(); ++n)
        CHECK(h2.at(static_cast<std::int64_t>(n)) == pell[n]);
    CHECK(h2.at(9) == 4);
    CHECK(h2.at(14) == 6);

    CelayaRuskeyH h3(3);
    CHECK(h3.at(5) == 1);

    CHECK_THROWS_AS(CelayaRuskeyH(0), std::invalid_argument);

    for (std::int64_t k = 1; k <= 5; ++k) {
        CelayaRuskeyH h(k);
        const QuadraticSurd gamma = metallic_gamma(k);
        for (std::int64_t n = 1; n <= 10000; ++n)
            CHECK(h.at(n) == floor_scale(gamma, n + 1));
    }
}

TEST_CASE("Pell family values and identities") {
    CHECK(pell_lower(3) == 7);
    CHECK(pell_upper(3) == 5);
    CHECK(hof_pell_closed(14) == 6);
    const std::vector<std::int64_t> swap_prefix = {2,  1,  4, 3,  7,  9,  5,  12, 6,
                                                   14, 16, 8, 19, 10, 21, 11, 24, 26};
    for (std::size_t i = 0; i < swap_prefix.size(); ++i)
        CHECK(pell_swap(static_cast<std::int64_t>(i + 1)) == swap_prefix[i]);
    for (std::int64_t n = 1; n <= 5000; ++n) {
        CHECK(hof_pell_closed(pell_lower(n)) == n);
        CHECK(hof_pell_closed(pell_upper(n)) == pell_r_slow(n));
        CHECK(pell_swap(pell_swap(n)) == n);
    }
}

TEST_CASE("Cloitre recursion equals its closed form") {
    CloitreSeq c;
    CHECK(c.at(1) == 1);
    CHECK(c.at(4) == 3);
    CHECK(cloitre_closed(4) == 3);
    for (std::int64_t n = 1; n <= 100000; ++n) CHECK(c.at(n) == cloitre_closed(n));
}

TEST_CASE("V recursion values") {
    VRecursion v;
    CHECK(v.at(1) == 1);
    CHECK(v.at(4) == 1);
    CHECK(v.at(5) == 2);
    CHECK(v.at(9) == 5);
    CHECK_THROWS_AS(v.at(0), std::invalid_argument);
    // slow-sequence sanity: nondecreasing with increments 0 or 1
    VRecursion v2;
    std::int64_t prev = 1;
    for (std::int64_t n = 1; n <= 20000; ++n) {
        const std::int64_t cur = v2.at(n);
        CHECK(cur >= prev);
        CHECK(cur - prev <= 1);
        prev = cur;
    }
}

TEST_CASE("registry parse and materialize") {
    CHECK(parse_sequence("G", std::nullopt)->which == Sequence::GClosed);
    CHECK(parse_sequence("g", std::nullopt)->which == Sequence::GClosed);
    CHECK(parse_sequence("A005206", std::nullopt)->which == Sequence::GClosed);
    CHECK(parse_sequence("Hk", 2)->k == 2);
    CHECK_FALSE(parse_sequence("Hk", std::nullopt).has_value());  // missing k
    CHECK_FALSE(parse_sequence("W", 3).has_value());              // stray k
    CHECK_FALSE(parse_sequence("nope", std::nullopt).has_value());

    const auto table = materialize({Sequence::WSwap}, 0, 18);
    CHECK(table == kTableW);
    const auto hk = materialize({Sequence::Hk, 2}, 0, 25);
    CHECK(hk[14] == 6);
    CHECK_THROWS_AS(materialize({Sequence::WythoffL}, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(materialize({Sequence::WSwap}, 5, 4), std::invalid_argument);
}
