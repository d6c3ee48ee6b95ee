#include "hoflab/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace hoflab {

namespace {

constexpr std::uint64_t kBase = 1ull << 32;

}  // namespace

BigInt::BigInt(std::int64_t v) {
    std::uint64_t mag;
    if (v < 0) {
        negative_ = true;
        mag = static_cast<std::uint64_t>(-(v + 1)) + 1;  // avoids INT64_MIN overflow
    } else {
        mag = static_cast<std::uint64_t>(v);
    }
    if (mag != 0) limbs_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt BigInt::from_u64(std::uint64_t v) {
    BigInt r;
    if (v != 0) r.limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) r.limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    return r;
}

BigInt BigInt::pow2(std::size_t k) {
    BigInt r;
    r.limbs_.assign(k / 32 + 1, 0);
    r.limbs_.back() = 1u << (k % 32);
    return r;
}

BigInt::BigInt(std::string_view decimal) {
    std::size_t i = 0;
    bool neg = false;
    if (i < decimal.size() && (decimal[i] == '+' || decimal[i] == '-')) {
        neg = decimal[i] == '-';
        ++i;
    }
    if (i == decimal.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < decimal.size(); ++i) {
        char ch = decimal[i];
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("BigInt: invalid digit in \"" + std::string(decimal) + "\"");
        // *this = *this * 10 + digit, in place
        std::uint64_t carry = static_cast<std::uint64_t>(ch - '0');
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    trim();
    negative_ = neg && !limbs_.empty();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::size_t top = 32 - static_cast<std::size_t>(__builtin_clz(limbs_.back()));
    return (limbs_.size() - 1) * 32 + top;
}

bool BigInt::fits_i64() const {
    if (limbs_.size() < 2) return true;
    if (limbs_.size() > 2) return false;
    std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

std::int64_t BigInt::to_i64() const {
    if (!fits_i64()) throw std::overflow_error("BigInt: value does not fit int64");
    std::uint64_t mag = 0;
    if (!limbs_.empty()) mag = limbs_[0];
    if (limbs_.size() > 1) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (negative_) return mag == (1ull << 63) ? INT64_MIN : -static_cast<std::int64_t>(mag);
    return static_cast<std::int64_t>(mag);
}

double BigInt::to_double() const {
    double r = 0.0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) r = r * 4294967296.0 + *it;
    return negative_ ? -r : r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t cur = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    out[big.size()] = static_cast<std::uint32_t>(carry);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(cur);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        limbs_ = add_mag(limbs_, rhs.limbs_);
    } else {
        int c = cmp_mag(*this, rhs);
        if (c == 0) {
            limbs_.clear();
            negative_ = false;
            return *this;
        }
        if (c > 0) {
            limbs_ = sub_mag(limbs_, rhs.limbs_);
        } else {
            limbs_ = sub_mag(rhs.limbs_, limbs_);
            negative_ = rhs.negative_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt out;
    if (lhs.limbs_.empty() || rhs.limbs_.empty()) return out;
    out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = lhs.limbs_[i];
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = ai * rhs.limbs_[j] + out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out.limbs_[i + rhs.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    out.trim();
    out.negative_ = lhs.negative_ != rhs.negative_ && !out.limbs_.empty();
    return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

void BigInt::divmod_mag(const std::vector<std::uint32_t>& num,
                        const std::vector<std::uint32_t>& den,
                        std::vector<std::uint32_t>& quot, std::vector<std::uint32_t>& rem) {
    if (den.empty()) throw std::domain_error("BigInt: division by zero");
    quot.clear();
    rem.clear();
    if (num.size() < den.size()) {
        rem = num;
        return;
    }
    if (den.size() == 1) {
        std::uint64_t d = den[0];
        quot.assign(num.size(), 0);
        std::uint64_t r = 0;
        for (std::size_t i = num.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | num[i];
            quot[i] = static_cast<std::uint32_t>(cur / d);
            r = cur % d;
        }
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        if (r) rem.push_back(static_cast<std::uint32_t>(r));
        return;
    }

    // Knuth algorithm D. Normalize so the top divisor limb has its high bit set.
    int shift = __builtin_clz(den.back());
    auto shl = [&](const std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& o) {
        o.assign(v.size() + 1, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            o[i] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i]) << shift);
            if (shift) o[i + 1] = static_cast<std::uint32_t>(v[i] >> (32 - shift));
        }
        while (!o.empty() && o.back() == 0) o.pop_back();
    };
    std::vector<std::uint32_t> u, v;
    shl(num, u);
    shl(den, v);
    const std::size_t n = v.size(), m = u.size() >= n ? u.size() - n : 0;
    u.resize(u.size() + 1, 0);
    quot.assign(m + 1, 0);
    const std::uint64_t vtop = v[n - 1], vnext = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t hi = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = hi / vtop, rhat = hi % vtop;
        while (qhat >= kBase || qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }
        // u[j..j+n] -= qhat * v
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffull) - borrow;
            borrow = 0;
            if (t < 0) {
                t += static_cast<std::int64_t>(kBase);
                borrow = 1;
            }
            u[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) -
                         borrow;
        if (t < 0) {
            // qhat was one too large; add back one copy of v.
            t += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
            t &= static_cast<std::int64_t>(kBase) - 1;
        }
        u[j + n] = static_cast<std::uint32_t>(t);
        quot[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    // Denormalize the remainder.
    rem.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t cur = u[i] >> shift;
        if (shift && i + 1 < u.size())
            cur |= static_cast<std::uint64_t>(u[i + 1]) << (32 - shift);
        rem[i] = static_cast<std::uint32_t>(cur);
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
    std::vector<std::uint32_t> quot, rem;
    divmod_mag(num.limbs_, den.limbs_, quot, rem);
    q.limbs_ = std::move(quot);
    r.limbs_ = std::move(rem);
    q.negative_ = !q.limbs_.empty() && (num.negative_ != den.negative_);
    r.negative_ = !r.limbs_.empty() && num.negative_;
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return *this = std::move(r);
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_)
        return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = BigInt::cmp_mag(a, b);
    if (a.negative_) c = -c;
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string BigInt::str() const {
    if (limbs_.empty()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        // divide by 10^9, emit 9 decimal digits
        std::uint64_t r = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (r << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            r = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + r % 10));
            r /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

BigInt floor_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    BigInt::divmod(num, den, q, r);
    // truncated -> floored: adjust when signs differ and division was inexact
    if (!r.is_zero() && (num.is_negative() != den.is_negative())) q -= 1;
    return q;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    if (r > 4294967295ull) r = 4294967295ull;  // floor(sqrt(2^64-1))
    while (r * r > n) --r;
    while (r < 4294967295ull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t isqrt_u128(unsigned __int128 n) {
    if (n <= 0xffffffffffffffffull) return isqrt_u64(static_cast<std::uint64_t>(n));
    long double a = sqrtl(static_cast<long double>(n));
    std::uint64_t r = a >= 18446744073709551615.0L ? 18446744073709551615ull
                                                   : static_cast<std::uint64_t>(a);
    if (r == 0) r = 1;
    unsigned __int128 next = (n / r + r) / 2;  // one integer Newton step
    r = next > 18446744073709551615ull ? 18446744073709551615ull
                                       : static_cast<std::uint64_t>(next);
    auto sq = [](std::uint64_t x) { return static_cast<unsigned __int128>(x) * x; };
    while (sq(r) > n) --r;
    while (r < 0xffffffffffffffffull && sq(r + 1) <= n) ++r;
    return r;
}

namespace {

// magnitude of v as unsigned __int128; requires 0 <= v < 2^128
unsigned __int128 mag_to_u128(const BigInt& v) {
    auto low64 = [](const BigInt& x) {  // x in [0, 2^64)
        BigInt q, r;
        BigInt::divmod(x, BigInt::pow2(32), q, r);
        return (static_cast<std::uint64_t>(q.to_i64()) << 32) |
               static_cast<std::uint64_t>(r.to_i64());
    };
    BigInt hi, lo;
    BigInt::divmod(v, BigInt::pow2(64), hi, lo);
    return (static_cast<unsigned __int128>(low64(hi)) << 64) | low64(lo);
}

}  // namespace

BigInt isqrt(const BigInt& n) {
    if (n.is_negative()) throw std::domain_error("isqrt: negative input");
    if (n.is_zero()) return 0;
    if (n.bit_length() <= 128) return BigInt::from_u64(isqrt_u128(mag_to_u128(n)));

    // Newton iteration from a power-of-two overestimate x0 >= sqrt(n); the
    // iterate decreases monotonically and exits within one of the floor.
    BigInt x = BigInt::pow2((n.bit_length() + 1) / 2);
    const BigInt two(2);
    for (;;) {
        BigInt y = (x + n / x) / two;
        if (y >= x) break;
        x = std::move(y);
    }
    while (x * x > n) x -= 1;
    while ((x + 1) * (x + 1) <= n) x += 1;
    return x;
}

}  // namespace hoflab
