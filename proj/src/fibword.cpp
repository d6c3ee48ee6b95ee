#include "hoflab/fibword.hpp"

#include <algorithm>

namespace hoflab::fibword {

BigInt fib(int m) {
    if (m < 1) throw std::invalid_argument("fib: index must be >= 1");
    BigInt prev(1), cur(1);  // F1, F2
    for (int i = 2; i < m; ++i) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return m == 1 ? prev : cur;
}

std::int64_t fib_i64(int m) {
    if (m < 1 || m > 92) throw std::invalid_argument("fib_i64: index must be in [1, 92]");
    std::int64_t prev = 1, cur = 1;
    for (int i = 2; i < m; ++i) {
        std::int64_t next = prev + cur;
        prev = cur;
        cur = next;
    }
    return m == 1 ? prev : cur;
}

std::optional<FibIndex> fib_index_of(const BigInt& x) {
    if (x < BigInt(1)) return std::nullopt;
    if (x == BigInt(1)) return FibIndex{BigInt(1), 2};  // canonical index for 1
    BigInt prev(1), cur(1);
    int index = 2;
    while (cur < x) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
        ++index;
    }
    if (cur == x) return FibIndex{x, index};
    return std::nullopt;
}

std::vector<int> zeckendorf(const BigInt& n) {
    if (n.is_negative()) throw std::invalid_argument("zeckendorf: negative input");
    std::vector<int> indices;
    if (n.is_zero()) return indices;
    // Fibonacci numbers up to n, indices from 2.
    std::vector<BigInt> fibs{BigInt(1), BigInt(2)};  // F2, F3
    while (fibs.back() < n)
        fibs.push_back(fibs[fibs.size() - 1] + fibs[fibs.size() - 2]);
    BigInt rest = n;
    for (std::size_t i = fibs.size(); i-- > 0 && !rest.is_zero();) {
        if (fibs[i] <= rest) {
            indices.push_back(static_cast<int>(i) + 2);
            rest -= fibs[i];
        }
    }
    return indices;
}

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
    zeros_ = static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '0'));
}

BinaryWord morphism_iterate(int m, int cap) {
    if (m < 0) throw std::invalid_argument("morphism_iterate: negative iterate");
    if (m > cap) throw std::invalid_argument("morphism_iterate: iterate exceeds cap");
    std::string w = "0";
    for (int step = 0; step < m; ++step) {
        std::string next;
        next.reserve(w.size() * 2);
        for (char ch : w) {
            if (ch == '0') {
                next += "01";
            } else {
                next += '0';
            }
        }
        w = std::move(next);
    }
    return BinaryWord(std::move(w));
}

std::int64_t position_of_mth_zero(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("position_of_mth_zero: m must be >= 1");
    FibonacciWordStream stream;
    std::int64_t pos = 0, seen = 0;
    for (;;) {
        ++pos;
        if (stream.next() == 0 && ++seen == m) return pos;
    }
}

std::int64_t position_of_mth_one(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("position_of_mth_one: m must be >= 1");
    FibonacciWordStream stream;
    std::int64_t pos = 0, seen = 0;
    for (;;) {
        ++pos;
        if (stream.next() == 1 && ++seen == m) return pos;
    }
}

WythoffAtFib wythoff_at_fib(int k) {
    if (k < 1) throw std::invalid_argument("wythoff_at_fib: k must be >= 1");
    const BigInt f2k1 = fib(2 * k + 1);
    const BigInt f2k2 = fib(2 * k + 2);
    return {f2k1 - BigInt(1), f2k2 - BigInt(1), fib(2 * k), f2k1};
}

}  // namespace hoflab::fibword
