#pragma once

// Exact arithmetic for quadratic irrationals (a + b*sqrt(d)) / c.
//
// Every floor expression in the sequence layer is evaluated through this
// type, so no floating point ever touches a sequence value. Values are
// immutable; operations return new surds in canonical form:
//   - c > 0, gcd(a, b, c) = 1
//   - d >= 2, squarefree (square factors are folded into b), never a
//     perfect square
//   - rational values carry b = 0 and the sentinel d = 2
// With that normalization, two surds are equal as reals iff their
// (a, b, c, d) tuples are equal.
//
// Arithmetic between two irrational surds requires matching d; a rational
// operand combines with any d. Comparison decides the sign of
// (a1*c2 - a2*c1) + (b1*c2 - b2*c1)*sqrt(d) exactly by squaring, so it
// needs no root extraction at all.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "hoflab/bigint.hpp"

namespace hoflab {

class QuadraticSurd {
public:
    // Zero (represented as (0 + 0*sqrt(2))/1).
    QuadraticSurd() : a_(0), b_(0), c_(1), d_(2) { cache_small(); }

    // (a + b*sqrt(d)) / c; throws std::invalid_argument on c = 0, d < 2 or
    // d a perfect square.
    QuadraticSurd(BigInt a, BigInt b, BigInt c, BigInt d);

    static QuadraticSurd rational(BigInt num, BigInt den = BigInt(1));
    static QuadraticSurd sqrt_of(BigInt d) { return {BigInt(0), BigInt(1), BigInt(1), std::move(d)}; }

    // The named constants of the golden and silver worlds.
    static const QuadraticSurd& golden_gamma();  // (sqrt5 - 1)/2
    static const QuadraticSurd& golden_phi();    // (1 + sqrt5)/2
    static const QuadraticSurd& golden_phi2();   // (3 + sqrt5)/2

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    int sign() const;
    bool in_unit_interval() const;  // 0 < value < 1

    QuadraticSurd operator-() const;
    QuadraticSurd inverse() const;  // throws std::domain_error on zero

    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);

    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y);
    friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y);

    std::string str() const;  // e.g. "(-1+1*sqrt(5))/2"

    friend std::ostream& operator<<(std::ostream& os, const QuadraticSurd& q);

    // Exposed for the floor kernels: true when a, b, c, d all fit int64.
    bool small() const { return small_; }
    std::int64_t sa() const { return sa_; }
    std::int64_t sb() const { return sb_; }
    std::int64_t sc() const { return sc_; }
    std::int64_t sd() const { return sd_; }

private:
    BigInt a_, b_, c_, d_;
    bool small_ = false;
    std::int64_t sa_ = 0, sb_ = 0, sc_ = 1, sd_ = 2;

    void canonicalize();
    void cache_small();
    // Common-d view of two operands; throws on incompatible d.
    static BigInt merged_d(const QuadraticSurd& x, const QuadraticSurd& y);
};

// floor(n * q), exact. Contract for b >= 0:
//   floor((n*a + isqrt(n^2*b^2*d)) / c)
// valid because sqrt(n^2*b^2*d) is irrational whenever n*b != 0. For b < 0
// the radical contributes -floor(sqrt(t)) - 1 instead. Requires n >= 0.
BigInt floor_scale(const QuadraticSurd& q, const BigInt& n);

// int64 fast path: runs entirely in machine words when q.small() and the
// intermediates provably fit; falls back to the BigInt route otherwise.
// Throws std::overflow_error if the result itself exceeds int64.
std::int64_t floor_scale(const QuadraticSurd& q, std::int64_t n);

BigInt floor_of(const QuadraticSurd& q);  // floor of the value itself (any sign)

// Slow Beatty sequence s(n) = floor((n+1)*gamma); requires 0 < gamma < 1.
BigInt slow_beatty(const QuadraticSurd& gamma, const BigInt& n);
std::int64_t slow_beatty(const QuadraticSurd& gamma, std::int64_t n);

// gamma_k = [0; k, k, k, ...] = (sqrt(k^2+4) - k)/2; requires k >= 1.
QuadraticSurd metallic_gamma(std::int64_t k);

// (1/gamma, 1/(1-gamma)) for 0 < gamma < 1: a complementary Beatty pair,
// i.e. 1/alpha + 1/beta = 1 exactly.
std::pair<QuadraticSurd, QuadraticSurd> complement_surd(const QuadraticSurd& gamma);

}  // namespace hoflab
