#pragma once

// Every sequence in scope, as exact closed forms where one is proven and as
// memoized recursions / greedy generators where the definition is stateful.
//
// Closed forms are pure and freely concurrent. The generator classes own a
// contiguous memo table grown on demand; a single-index query fills the
// table up to that index. They are single-owner objects: share across
// threads only behind external serialization, or give each thread its own.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hoflab/surd.hpp"

namespace hoflab::seq {

// ---------------------------------------------------------------- closed forms

std::int64_t hof_g_closed(std::int64_t n);   // floor((n+1)*gamma), n >= 0
std::int64_t wythoff_lower(std::int64_t n);  // floor(n*phi), n >= 1
std::int64_t wythoff_upper(std::int64_t n);  // floor(n*phi^2) = L(n)+n, n >= 1
BigInt wythoff_lower_big(const BigInt& n);
BigInt wythoff_upper_big(const BigInt& n);

// Wythoff swap W (A002251, offset 0): W(0)=0; otherwise G(n) when the
// G-increment into n is flat, G(n)+n when it steps.
std::int64_t wythoff_swap(std::int64_t n);
// Same sequence through the other route: locate n as L(m) or U(m), return
// the partner value.
std::int64_t wythoff_swap_partner(std::int64_t n);

std::int64_t hof_pell_closed(std::int64_t n);  // floor((n+1)*(sqrt2-1)), n >= 0
std::int64_t pell_r_slow(std::int64_t n);      // floor(n/sqrt2), n >= 0
std::int64_t pell_lower(std::int64_t n);       // floor(n*(1+sqrt2)), n >= 1
std::int64_t pell_upper(std::int64_t n);       // floor(n*(1+sqrt2/2)), n >= 1
std::int64_t pell_swap(std::int64_t n);        // partner swap of the Pell pair, n >= 1

std::int64_t cloitre_closed(std::int64_t n);   // floor((n+1)*(sqrt3-1)), n >= 0

// A complementary Beatty pair (alpha, beta) = (1/gamma, 1/(1-gamma)) with
// the rank/membership machinery every swap and partition check needs.
class BeattyPair {
public:
    explicit BeattyPair(QuadraticSurd gamma);

    static const BeattyPair& golden();
    static const BeattyPair& pell();

    const QuadraticSurd& gamma() const { return gamma_; }
    const QuadraticSurd& co_gamma() const { return co_gamma_; }
    const QuadraticSurd& alpha() const { return alpha_; }
    const QuadraticSurd& beta() const { return beta_; }

    std::int64_t lower(std::int64_t n) const;  // floor(n*alpha), n >= 1
    std::int64_t upper(std::int64_t n) const;  // floor(n*beta), n >= 1

    // #{m >= 1 : lower(m) <= x} = floor((x+1)*gamma); same for upper.
    std::int64_t lower_rank(std::int64_t x) const;
    std::int64_t upper_rank(std::int64_t x) const;
    bool is_lower_value(std::int64_t x) const;

    std::int64_t swap(std::int64_t x) const;  // partner of x, x >= 1

private:
    QuadraticSurd gamma_, co_gamma_, alpha_, beta_;
};

// ------------------------------------------------------- memoized recursions

/// Hofstadter's G: G(0)=0, G(1)=1, G(n)=n-G(G(n-1)).
class HofstadterG {
public:
    std::int64_t at(std::int64_t n);

private:
    std::vector<std::int64_t> memo_{0, 1};
};

/// Celaya-Ruskey family: H(n)=0 for n<k, else
/// H(n) = n-k+1 - sum_{i=1..k-1} H(n-i) - H(H(n-k)). k=1 is G, k=2 is the
/// Hofstadter-Pell sequence.
class CelayaRuskeyH {
public:
    explicit CelayaRuskeyH(std::int64_t k);
    std::int64_t k() const { return k_; }
    std::int64_t at(std::int64_t n);

private:
    std::int64_t k_;
    std::vector<std::int64_t> memo_;
};

/// Hofstadter's married pair: a(0)=1, b(0)=0, a(n)=n-b(a(n-1)),
/// b(n)=n-a(b(n-1)).
class MarriedPair {
public:
    std::int64_t a(std::int64_t n);
    std::int64_t b(std::int64_t n);

private:
    void extend(std::int64_t n);
    std::vector<std::int64_t> a_{1}, b_{0};
};

/// Venkatachala's greedy f: f(n) is the least unused natural number making
/// f(1)+...+f(n) divisible by n.
class GreedyF {
public:
    std::int64_t at(std::int64_t n);  // n >= 1

private:
    void extend(std::int64_t n);
    std::vector<std::int64_t> vals_;
    std::vector<bool> used_;
    std::int64_t sum_ = 0;
};

/// Avdivpahic-Zejnulahi greedy z: least unused natural number with
/// z(1)+...+z(n) = 1 mod (n+1); m(n) = (z(2)+...+z(n))/(n+1), an exact
/// integer (m(1) = 0 from the empty sum).
class GreedyZ {
public:
    std::int64_t z(std::int64_t n);  // n >= 1
    std::int64_t m(std::int64_t n);  // n >= 1

private:
    void extend(std::int64_t n);
    std::vector<std::int64_t> vals_;
    std::vector<std::int64_t> sums_;  // sums_[i] = z(1)+...+z(i+1)
    std::vector<bool> used_;
};

/// A063882: V(1..4)=1, V(n)=V(n-V(n-1))+V(n-V(n-4)).
class VRecursion {
public:
    std::int64_t at(std::int64_t n);  // n >= 1

private:
    std::vector<std::int64_t> memo_{0, 1, 1, 1, 1};  // index 0 unused
};

/// A138466: a(1)=1, a(n) = n - floor(a(a(n-1))/2).
class CloitreSeq {
public:
    std::int64_t at(std::int64_t n);  // n >= 1

private:
    std::vector<std::int64_t> memo_{0, 1};  // index 0 unused
};

/// Averaged Wythoff swap (A073869): (sum_{i<=n} W(i))/(n+1), with the exact
/// divisibility asserted; a failure would falsify the averaging theorem.
class SwapAverage {
public:
    std::int64_t at(std::int64_t n);  // n >= 0

private:
    std::vector<std::int64_t> avgs_;
    std::int64_t sum_ = 0;
};

// ---------------------------------------------------------------- registry

enum class Sequence {
    GRec,
    GClosed,
    WythoffL,
    WythoffU,
    WSwap,
    WAvg,
    FGreedy,
    ZGreedy,
    MAvg,
    MarriedA,
    MarriedB,
    Hk,
    HPell,
    RSlow,
    LPell,
    UPell,
    WPellSwap,
    Cloitre,
    VRec,
};

struct SequenceId {
    Sequence which;
    std::int64_t k = 0;  // meaningful only for Hk
};

struct SequenceInfo {
    Sequence which;
    const char* cli_name;
    const char* oeis;  // "" when the paper assigns no A-number
    std::int64_t first_index;
    bool parameterized;
    const char* summary;
};

const std::vector<SequenceInfo>& catalog();
const SequenceInfo& info(Sequence s);

// Case-insensitive lookup by CLI name or A-number; nullopt when unknown or
// when k is required but absent (or given but not applicable).
std::optional<SequenceId> parse_sequence(std::string_view name,
                                         std::optional<std::int64_t> k);

// Values at indices [from, to]; throws std::invalid_argument on a range
// that starts before the sequence's first index.
std::vector<std::int64_t> materialize(SequenceId id, std::int64_t from, std::int64_t to);

}  // namespace hoflab::seq
