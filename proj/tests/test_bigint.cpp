#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hoflab/bigint.hpp"

using hoflab::BigInt;

namespace {

std::mt19937_64 rng(0x5eedf00dULL);

std::int64_t rand_i64(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

BigInt random_big(int limbs) {
    BigInt v(0);
    for (int i = 0; i < limbs; ++i)
        v = v * BigInt(1000000000) + BigInt(rand_i64(0, 999999999));
    return rand_i64(0, 1) ? v : -v;
}

}  // namespace

TEST_CASE("construction and decimal round trip") {
    CHECK(BigInt().str() == "0");
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(-1).str() == "-1");
    CHECK(BigInt(INT64_MIN).str() == "-9223372036854775808");
    CHECK(BigInt(INT64_MAX).str() == "9223372036854775807");
    CHECK(BigInt("000123").str() == "123");
    CHECK(BigInt("-0").str() == "0");
    const std::string digits = "123456789012345678901234567890123456789";
    CHECK(BigInt(digits).str() == digits);
    CHECK_THROWS_AS(BigInt(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt("12x3"), std::invalid_argument);
    CHECK_THROWS_AS(BigInt("-"), std::invalid_argument);
}

TEST_CASE("i64 round trip and bounds") {
    const std::int64_t interesting[] = {INT64_MIN, INT64_MIN + 1, -1, 0, 1, INT64_MAX};
    for (std::int64_t v : interesting) {
        CHECK(BigInt(v).to_i64() == v);
        CHECK(BigInt(v).fits_i64());
    }
    CHECK_FALSE((BigInt(INT64_MAX) + BigInt(1)).fits_i64());
    CHECK((BigInt(INT64_MIN)).fits_i64());
    CHECK_FALSE((BigInt(INT64_MIN) - BigInt(1)).fits_i64());
    CHECK_THROWS_AS((BigInt(INT64_MAX) + BigInt(1)).to_i64(), std::overflow_error);
}

namespace {

BigInt from_i128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v)
                                : static_cast<unsigned __int128>(v);
    BigInt hi = BigInt::from_u64(static_cast<std::uint64_t>(mag >> 64));
    BigInt lo = BigInt::from_u64(static_cast<std::uint64_t>(mag));
    BigInt out = hi * (BigInt(1) + BigInt::from_u64(UINT64_MAX)) + lo;
    return neg ? -out : out;
}

}  // namespace

TEST_CASE("arithmetic agrees with __int128 on random values") {
    for (int i = 0; i < 5000; ++i) {
        const std::int64_t x = rand_i64(-2000000000000000000, 2000000000000000000);
        const std::int64_t y = rand_i64(-2000000000000000000, 2000000000000000000);
        CHECK((BigInt(x) + BigInt(y)).to_i64() == x + y);
        CHECK((BigInt(x) - BigInt(y)).to_i64() == x - y);
        const __int128 prod = static_cast<__int128>(x) * y;
        const BigInt big_prod = BigInt(x) * BigInt(y);
        CHECK(big_prod == from_i128(prod));
        CHECK(big_prod / BigInt(1000003) == from_i128(prod / 1000003));
        CHECK(big_prod % BigInt(1000003) == from_i128(prod % 1000003));
        if (y != 0) {
            CHECK((BigInt(x) / BigInt(y)).to_i64() == x / y);
            CHECK((BigInt(x) % BigInt(y)).to_i64() == x % y);
        }
    }
}

TEST_CASE("divmod identity and sign convention on big random values") {
    for (int i = 0; i < 2000; ++i) {
        const BigInt num = random_big(1 + static_cast<int>(rand_i64(0, 5)));
        BigInt den = random_big(1 + static_cast<int>(rand_i64(0, 3)));
        if (den.is_zero()) den = BigInt(7);
        BigInt q, r;
        BigInt::divmod(num, den, q, r);
        CHECK(q * den + r == num);
        CHECK(r.abs() < den.abs());
        if (!r.is_zero()) CHECK(r.is_negative() == num.is_negative());
    }
    BigInt q, r;
    CHECK_THROWS_AS(BigInt::divmod(BigInt(1), BigInt(0), q, r), std::domain_error);
}

TEST_CASE("division stress on boundary limb patterns") {
    // numerators up to 3 limbs and denominators up to 2 limbs fit __int128,
    // so native division is a complete oracle; the patterns drive the trial
    // quotient through its correction and add-back paths.
    const std::uint32_t limbs[] = {0u,          1u,          2u,          0x7fffffffu,
                                   0x80000000u, 0x80000001u, 0xfffffffeu, 0xffffffffu};
    auto compose = [](std::initializer_list<std::uint32_t> parts) {
        unsigned __int128 v = 0;
        for (auto p : parts) v = (v << 32) | p;
        return v;
    };
    auto to_big = [](unsigned __int128 v) {
        BigInt out(0);
        const BigInt two32(4294967296ll);
        for (int shift = 96; shift >= 0; shift -= 32)
            out = out * two32 + BigInt(static_cast<std::int64_t>((v >> shift) & 0xffffffffull));
        return out;
    };
    for (auto n2 : limbs)
        for (auto n1 : limbs)
            for (auto n0 : limbs)
                for (auto d1 : limbs)
                    for (auto d0 : {1u, 0x7fffffffu, 0x80000000u, 0xffffffffu}) {
                        const unsigned __int128 num = compose({n2, n1, n0});
                        const unsigned __int128 den = compose({d1, d0});
                        if (den == 0) continue;
                        BigInt q, r;
                        BigInt::divmod(to_big(num), to_big(den), q, r);
                        REQUIRE(q == to_big(num / den));
                        REQUIRE(r == to_big(num % den));
                    }
}

TEST_CASE("floor_div rounds toward minus infinity") {
    CHECK(floor_div(BigInt(7), BigInt(2)).to_i64() == 3);
    CHECK(floor_div(BigInt(-7), BigInt(2)).to_i64() == -4);
    CHECK(floor_div(BigInt(7), BigInt(-2)).to_i64() == -4);
    CHECK(floor_div(BigInt(-7), BigInt(-2)).to_i64() == 3);
    CHECK(floor_div(BigInt(-8), BigInt(2)).to_i64() == -4);
}

TEST_CASE("comparison is a total order consistent with arithmetic") {
    for (int i = 0; i < 2000; ++i) {
        const BigInt a = random_big(1 + static_cast<int>(rand_i64(0, 4)));
        const BigInt b = random_big(1 + static_cast<int>(rand_i64(0, 4)));
        const auto ord = a <=> b;
        CHECK((ord == std::strong_ordering::less) == (a - b).is_negative());
        CHECK((ord == std::strong_ordering::equal) == (a - b).is_zero());
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(BigInt(0), BigInt(0)).is_zero());
    CHECK(gcd(BigInt(0), BigInt(-6)).to_i64() == 6);
    CHECK(gcd(BigInt(12), BigInt(18)).to_i64() == 6);
    CHECK(gcd(BigInt("123456789123456789"), BigInt("987654321987654321")).str() ==
          "9000000009");
    for (int i = 0; i < 300; ++i) {
        const BigInt a = random_big(3);
        const BigInt b = random_big(3);
        const BigInt g = gcd(a, b);
        if (g.is_zero()) continue;
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
    }
}

TEST_CASE("isqrt spec examples") {
    CHECK(isqrt(BigInt(0)).to_i64() == 0);
    CHECK(isqrt(BigInt(5)).to_i64() == 2);
    BigInt big(1);
    for (int i = 0; i < 36; ++i) big *= BigInt(10);
    CHECK(isqrt(big).str() == "1000000000000000000");
    CHECK_THROWS_AS(isqrt(BigInt(-1)), std::domain_error);
}

TEST_CASE("isqrt floor property on random values of many sizes") {
    for (int limbs = 1; limbs <= 8; ++limbs) {
        for (int i = 0; i < 300; ++i) {
            const BigInt n = random_big(limbs).abs();
            const BigInt r = isqrt(n);
            CHECK(r * r <= n);
            CHECK((r + BigInt(1)) * (r + BigInt(1)) > n);
        }
    }
    // perfect squares and their neighbors
    for (int i = 0; i < 300; ++i) {
        const BigInt r = random_big(4).abs();
        const BigInt sq = r * r;
        CHECK(isqrt(sq) == r);
        if (!sq.is_zero()) CHECK(isqrt(sq - BigInt(1)) == r - BigInt(1));
        CHECK(isqrt(sq + BigInt(1)) == r);
    }
}

TEST_CASE("machine-word isqrt boundaries") {
    using hoflab::isqrt_u128;
    using hoflab::isqrt_u64;
    CHECK(isqrt_u64(0) == 0);
    CHECK(isqrt_u64(UINT64_MAX) == 4294967295ull);
    CHECK(isqrt_u64(4294967295ull * 4294967295ull) == 4294967295ull);
    CHECK(isqrt_u64(4294967295ull * 4294967295ull - 1) == 4294967294ull);
    const unsigned __int128 max128 = ~static_cast<unsigned __int128>(0);
    CHECK(isqrt_u128(max128) == UINT64_MAX);
    const unsigned __int128 big = static_cast<unsigned __int128>(UINT64_MAX) * UINT64_MAX;
    CHECK(isqrt_u128(big) == UINT64_MAX);
    CHECK(isqrt_u128(big - 1) == UINT64_MAX - 1);
    for (int i = 0; i < 5000; ++i) {
        const auto v = static_cast<std::uint64_t>(rng());
        const unsigned __int128 n =
            (static_cast<unsigned __int128>(rng()) << 64) | rng();
        const std::uint64_t r64 = isqrt_u64(v);
        CHECK(static_cast<unsigned __int128>(r64) * r64 <= v);
        CHECK(static_cast<unsigned __int128>(r64 + 1) * (r64 + 1) > v);
        const std::uint64_t r128 = isqrt_u128(n);
        CHECK(static_cast<unsigned __int128>(r128) * r128 <= n);
        if (r128 != UINT64_MAX)
            CHECK(static_cast<unsigned __int128>(r128 + 1) * (r128 + 1) > n);
    }
}
