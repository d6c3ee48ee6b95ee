#pragma once

// Fibonacci numbers (F1 = F2 = 1, F3 = 2), Fibonacci-index detection,
// Zeckendorf representation, and the Fibonacci-word morphism
// mu: 0 -> 01, 1 -> 0 whose fixed point has its m-th zero at the lower
// Wythoff position L(m).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hoflab/bigint.hpp"

namespace hoflab::fibword {

BigInt fib(int m);            // m >= 1
std::int64_t fib_i64(int m);  // m in [1, 92]

struct FibIndex {
    BigInt value;
    int index;  // >= 2; value 1 canonically reports index 2
    bool even_index() const { return index % 2 == 0; }
};

// Identifies x as a Fibonacci number, or nullopt.
std::optional<FibIndex> fib_index_of(const BigInt& x);

// Strictly decreasing indices >= 2, no two consecutive, with sum F = n.
std::vector<int> zeckendorf(const BigInt& n);

class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::string bits);

    std::size_t size() const { return bits_.size(); }
    std::size_t zeros() const { return zeros_; }
    std::size_t ones() const { return bits_.size() - zeros_; }
    char operator[](std::size_t i) const { return bits_[i]; }
    const std::string& str() const { return bits_; }

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

private:
    std::string bits_;
    std::size_t zeros_ = 0;
};

// Word length F_{m+2} grows fast; iterates beyond the cap are rejected.
inline constexpr int kMorphismCap = 32;

// mu^m(0); under this project's Fibonacci convention the counts are
// |mu^m(0)| = F_{m+2}, zeros F_{m+1}, ones F_m.
BinaryWord morphism_iterate(int m, int cap = kMorphismCap);

// Streams the infinite Fibonacci word by feeding the morphism with its own
// output, so only the consumed prefix is ever materialized.
class FibonacciWordStream {
public:
    FibonacciWordStream() : buf_{0, 1}, read_(1) {}
    int next() {
        if (out_ == buf_.size()) expand();
        return buf_[out_++];
    }

private:
    void expand() {
        while (out_ >= buf_.size()) {
            if (buf_[read_++] == 0) {
                buf_.push_back(0);
                buf_.push_back(1);
            } else {
                buf_.push_back(0);
            }
        }
    }
    std::vector<std::uint8_t> buf_;
    std::size_t read_;
    std::size_t out_ = 0;
};

// 1-based position of the m-th zero / one in the infinite Fibonacci word.
std::int64_t position_of_mth_zero(std::int64_t m);
std::int64_t position_of_mth_one(std::int64_t m);

// The four closed-form Wythoff values at Fibonacci numbers:
// L(F_2k) = F_{2k+1}-1, U(F_2k) = F_{2k+2}-1, L(F_{2k-1}) = F_2k,
// U(F_{2k-1}) = F_{2k+1}.
struct WythoffAtFib {
    BigInt lower_at_even;  // L(F_2k)
    BigInt upper_at_even;  // U(F_2k)
    BigInt lower_at_odd;   // L(F_{2k-1})
    BigInt upper_at_odd;   // U(F_{2k-1})
};
WythoffAtFib wythoff_at_fib(int k);  // k >= 1

}  // namespace hoflab::fibword
