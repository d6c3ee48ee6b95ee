#pragma once

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
//
// Sized for this project: every quantity that appears in the sequence
// computations (n^2*b^2*d under the exact floor, Fibonacci numbers up to
// F_82, continued-fraction convergents past 10^12) stays below a few
// hundred bits, so schoolbook arithmetic is the right tool. Hot paths in
// the surd layer bypass BigInt entirely when values provably fit machine
// words; this class is the always-correct route.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hoflab {

class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
    explicit BigInt(std::string_view decimal);

    static BigInt from_u64(std::uint64_t v);
    static BigInt pow2(std::size_t k);      // 2^k

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    // Number of bits in the magnitude; 0 for zero.
    std::size_t bit_length() const;

    bool fits_i64() const;
    std::int64_t to_i64() const;            // throws std::overflow_error
    double to_double() const;               // lossy, for reporting only

    std::string str() const;

    BigInt abs() const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);  // truncated toward zero
    BigInt& operator%=(const BigInt& rhs);  // sign follows dividend

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);
    friend BigInt operator/(BigInt lhs, const BigInt& rhs) { return lhs /= rhs; }
    friend BigInt operator%(BigInt lhs, const BigInt& rhs) { return lhs %= rhs; }

    // Truncated division: num = q*den + r with |r| < |den|, sign(r) = sign(num).
    static void divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    // Little-endian limbs, no trailing zero limbs; empty vector is zero.
    std::vector<std::uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& num,
                           const std::vector<std::uint32_t>& den,
                           std::vector<std::uint32_t>& quot,
                           std::vector<std::uint32_t>& rem);
};

// Floor division: largest q with q*den <= num (den != 0).
BigInt floor_div(const BigInt& num, const BigInt& den);

BigInt gcd(BigInt a, BigInt b);

// Integer square root: r with r^2 <= n < (r+1)^2. Rejects n < 0.
// Newton iteration with a final floor-correction step.
BigInt isqrt(const BigInt& n);

// Machine-word integer square roots used by the fast floor paths.
std::uint64_t isqrt_u64(std::uint64_t n);
std::uint64_t isqrt_u128(unsigned __int128 n);

}  // namespace hoflab
