#include "hoflab/surd.hpp"

#include <ostream>
#include <stdexcept>

namespace hoflab {

namespace {

std::size_t bl_u64(std::uint64_t v) {
    return v == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(v));
}

std::uint64_t mag_i64(std::int64_t v) {
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

// Sign of x + y*sqrt(d) for canonical d (>= 2, not a perfect square).
int sign_xy(const BigInt& x, const BigInt& y, const BigInt& d) {
    const int sx = x.sign(), sy = y.sign();
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    const auto cmp = x * x <=> y * y * d;
    if (cmp == std::strong_ordering::equal)
        throw std::logic_error("surd: x^2 = y^2*d with nonzero x, y and non-square d");
    // exactly one of x, y is negative
    if (sx > 0) return cmp > 0 ? 1 : -1;   // x > 0 > y: positive iff x^2 > y^2 d
    return cmp < 0 ? 1 : -1;               // y > 0 > x: positive iff y^2 d > x^2
}

}  // namespace

QuadraticSurd::QuadraticSurd(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    canonicalize();
}

QuadraticSurd QuadraticSurd::rational(BigInt num, BigInt den) {
    return {std::move(num), BigInt(0), std::move(den), BigInt(2)};
}

const QuadraticSurd& QuadraticSurd::golden_gamma() {
    static const QuadraticSurd g(BigInt(-1), BigInt(1), BigInt(2), BigInt(5));
    return g;
}

const QuadraticSurd& QuadraticSurd::golden_phi() {
    static const QuadraticSurd g(BigInt(1), BigInt(1), BigInt(2), BigInt(5));
    return g;
}

const QuadraticSurd& QuadraticSurd::golden_phi2() {
    static const QuadraticSurd g(BigInt(3), BigInt(1), BigInt(2), BigInt(5));
    return g;
}

void QuadraticSurd::canonicalize() {
    if (c_.is_zero()) throw std::invalid_argument("surd: zero denominator");
    if (c_.is_negative()) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    if (b_.is_zero()) {
        d_ = 2;
    } else {
        if (d_ < BigInt(2)) throw std::invalid_argument("surd: radicand must be >= 2");
        const BigInt root = isqrt(d_);
        if (root * root == d_) throw std::invalid_argument("surd: radicand is a perfect square");
        // Fold square factors of d into b so equal values share one radicand.
        // Trial division; every radicand this project meets is tiny. Radicands
        // beyond 64 bits are left as given.
        if (d_.fits_i64()) {
            std::int64_t d = d_.to_i64();
            std::int64_t f = 1;
            for (std::int64_t p = 2; p * p <= d; ++p) {
                while (d % (p * p) == 0) {
                    d /= p * p;
                    f *= p;
                }
            }
            if (f != 1) {
                b_ *= BigInt(f);
                d_ = d;
            }
        }
    }
    const BigInt g = gcd(gcd(a_, b_), c_);
    if (g > BigInt(1)) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
    cache_small();
}

void QuadraticSurd::cache_small() {
    small_ = a_.fits_i64() && b_.fits_i64() && c_.fits_i64() && d_.fits_i64();
    if (small_) {
        sa_ = a_.to_i64();
        sb_ = b_.to_i64();
        sc_ = c_.to_i64();
        sd_ = d_.to_i64();
    }
}

int QuadraticSurd::sign() const { return sign_xy(a_, b_, d_); }

bool QuadraticSurd::in_unit_interval() const {
    return sign() > 0 && sign_xy(a_ - c_, b_, d_) < 0;
}

QuadraticSurd QuadraticSurd::operator-() const { return {-a_, -b_, c_, d_}; }

QuadraticSurd QuadraticSurd::inverse() const {
    if (is_zero()) throw std::domain_error("surd: inverse of zero");
    // c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
    return {c_ * a_, -(c_ * b_), a_ * a_ - b_ * b_ * d_, d_};
}

BigInt QuadraticSurd::merged_d(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational() || x.d_ == y.d_) return x.d_;
    throw std::domain_error("surd: mixed radicands " + x.d_.str() + " and " + y.d_.str());
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    BigInt d = QuadraticSurd::merged_d(x, y);
    return {x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, std::move(d)};
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return x + (-y); }

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    BigInt d = QuadraticSurd::merged_d(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + y.a_ * x.b_, x.c_ * y.c_,
            std::move(d)};
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x * y.inverse();
}

bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
    const BigInt d = QuadraticSurd::merged_d(x, y);
    const int s = sign_xy(x.a_ * y.c_ - y.a_ * x.c_, x.b_ * y.c_ - y.b_ * x.c_, d);
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string QuadraticSurd::str() const {
    if (b_.is_zero()) return c_ == BigInt(1) ? a_.str() : a_.str() + "/" + c_.str();
    std::string radical;
    if (b_ == BigInt(1)) {
        radical = "+sqrt(" + d_.str() + ")";
    } else if (b_ == BigInt(-1)) {
        radical = "-sqrt(" + d_.str() + ")";
    } else {
        radical = (b_.is_negative() ? "" : "+") + b_.str() + "*sqrt(" + d_.str() + ")";
    }
    return "(" + a_.str() + radical + ")/" + c_.str();
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& q) { return os << q.str(); }

BigInt floor_scale(const QuadraticSurd& q, const BigInt& n) {
    if (n.is_negative()) throw std::invalid_argument("floor_scale: negative scale");
    if (n.is_zero() || q.is_zero()) return 0;
    BigInt num = n * q.a();
    if (!q.b().is_zero()) {
        const BigInt t = n * n * q.b() * q.b() * q.d();
        const BigInt r = isqrt(t);
        // sqrt(t) is irrational here (d squarefree, n*b != 0), so the floor
        // of -sqrt(t) is -r-1 exactly.
        if (q.b().is_negative()) {
            num -= r + BigInt(1);
        } else {
            num += r;
        }
    }
    return floor_div(num, q.c());
}

std::int64_t floor_scale(const QuadraticSurd& q, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("floor_scale: negative scale");
    if (q.small()) {
        const std::size_t bn = bl_u64(static_cast<std::uint64_t>(n));
        const std::size_t bb = bl_u64(mag_i64(q.sb()));
        const std::size_t bd = bl_u64(mag_i64(q.sd()));
        const std::size_t ba = bl_u64(mag_i64(q.sa()));
        if (2 * bn + 2 * bb + bd <= 126 && bn + ba <= 126) {
            const unsigned __int128 nn = static_cast<unsigned __int128>(n) * n;
            const std::uint64_t babs = mag_i64(q.sb());
            const unsigned __int128 t =
                nn * (static_cast<unsigned __int128>(babs) * babs) *
                static_cast<std::uint64_t>(q.sd());
            __int128 num = static_cast<__int128>(n) * q.sa();
            if (q.sb() > 0) {
                num += static_cast<__int128>(isqrt_u128(t));
            } else if (q.sb() < 0 && n > 0) {
                num -= static_cast<__int128>(isqrt_u128(t)) + 1;
            }
            __int128 quot = num / q.sc();
            if (num % q.sc() != 0 && num < 0) --quot;
            if (quot >= INT64_MIN && quot <= INT64_MAX) return static_cast<std::int64_t>(quot);
            throw std::overflow_error("floor_scale: result exceeds int64");
        }
    }
    return floor_scale(q, BigInt(n)).to_i64();
}

BigInt floor_of(const QuadraticSurd& q) {
    BigInt num = q.a();
    if (!q.b().is_zero()) {
        const BigInt r = isqrt(q.b() * q.b() * q.d());
        num += q.b().is_negative() ? -(r + BigInt(1)) : r;
    }
    return floor_div(num, q.c());
}

BigInt slow_beatty(const QuadraticSurd& gamma, const BigInt& n) {
    if (!gamma.in_unit_interval())
        throw std::domain_error("slow_beatty: gamma must lie in (0,1)");
    return floor_scale(gamma, n + BigInt(1));
}

std::int64_t slow_beatty(const QuadraticSurd& gamma, std::int64_t n) {
    if (!gamma.in_unit_interval())
        throw std::domain_error("slow_beatty: gamma must lie in (0,1)");
    return floor_scale(gamma, n + 1);
}

QuadraticSurd metallic_gamma(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("metallic_gamma: k must be >= 1");
    const BigInt kk(k);
    return {-kk, BigInt(1), BigInt(2), kk * kk + BigInt(4)};
}

std::pair<QuadraticSurd, QuadraticSurd> complement_surd(const QuadraticSurd& gamma) {
    if (!gamma.in_unit_interval())
        throw std::domain_error("complement_surd: gamma must lie in (0,1)");
    return {gamma.inverse(), (QuadraticSurd::rational(1) - gamma).inverse()};
}

}  // namespace hoflab
