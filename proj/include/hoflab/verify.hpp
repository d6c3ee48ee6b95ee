#pragma once

// Executable form of every theorem, lemma, proposition and identity in
// scope. Each check scans an index range and reports pass/fail counts plus
// the first counterexample.
//
// The scan core runs either as an OpenMP kernel or as the serial reference
// loop; both produce identical reports (the failing index merged across
// threads is the minimum, and counts are additive), which the test suite
// asserts and the bench tool times. Checks whose inputs are inherently
// sequential (greedy prefixes, memoized recursions) build their tables
// serially first; the comparison scan over the read-only tables is the
// data-parallel part.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hoflab/sequences.hpp"

namespace hoflab::verify {

enum class Exec { Serial, Parallel };

struct Counterexample {
    std::int64_t index = 0;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string name;
    std::int64_t lo = 0;
    std::int64_t hi = -1;  // hi < lo means an empty range
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::optional<Counterexample> first_counterexample;
    double elapsed_ms = 0.0;

    bool ok() const { return failed == 0; }
    // Plain text, byte-stable across runs (no timing included).
    std::string line() const;
    // Structured record: name, lo, hi, passed, failed, counterexample
    // (nullable), elapsed_ms.
    std::string json() const;
};

std::string reports_json(const std::vector<CheckReport>& reports);

// Per-index probe: true to pass; on failure fill expected/actual.
using Probe = std::function<bool(std::int64_t n, std::string& expected, std::string& actual)>;

// Scan [lo, hi] with the probe. A probe that throws fails that index.
CheckReport scan_range(std::string name, std::int64_t lo, std::int64_t hi, Exec exec,
                       const Probe& probe);

// ------------------------------------------------------------------ checks

// Recursion vs closed form for G. fault_index corrupts the closed-form side
// at one index (harness self-test hook).
CheckReport check_g_equiv(std::int64_t n, Exec exec,
                          std::optional<std::int64_t> fault_index = std::nullopt);

// Kimberling-Stolarsky split of the slow Beatty sequence of gamma.
CheckReport check_ks_split(std::string name, const QuadraticSurd& gamma, std::int64_t n,
                           Exec exec);

// s(L(n)) = n and s(U(n)) = floor(gamma/(1-gamma) * n).
CheckReport check_slu(std::string name, const QuadraticSurd& gamma, std::int64_t n, Exec exec);

// Averaged swap: divisibility of partial sums, Wavg = G, and
// (n+1)G(n) - nG(n-1) = W(n).
CheckReport check_avg_theorem(std::int64_t n, Exec exec);

// W(U(n)) = floor(gamma*U(n)) and W(L(n)) = floor(phi*L(n)) + 1.
CheckReport check_scatter_lines(std::int64_t n, Exec exec);

// The four Wythoff values at Fibonacci numbers, k in [1, kmax].
CheckReport check_fib_lemma(std::int64_t kmax, Exec exec);

// z vs W and m vs Wavg with the exception laws at odd-indexed Fibonacci
// numbers (law applied for k >= 2; n in {1,2} asserted individually).
CheckReport check_az(std::int64_t n, Exec exec);

// Married functions vs floor((n+1)gamma) with their exception laws, plus
// b = m.
CheckReport check_stoll(std::int64_t n, Exec exec);

// W(n) = f(n+1) - 1.
CheckReport check_greedy_f(std::int64_t n, Exec exec);

// Celaya-Ruskey recursion equals floor((n+1)*gamma_k) for one k.
CheckReport check_cr(std::int64_t k, std::int64_t n, Exec exec);

// Hofstadter-Pell listing prefix (k = 2 family member) against its fixed
// expansion.
CheckReport check_pell_listing(Exec exec);

// Cloitre recursion equals floor((n+1)(sqrt3-1)).
CheckReport check_cloitre(std::int64_t n, Exec exec);

// H(Lpell(n)) = n and H(Upell(n)) = R(n) via the actual recursion table.
CheckReport check_pell(std::int64_t n, Exec exec);

// Pell swap prefix from the text listing.
CheckReport check_pell_swap_prefix(Exec exec);

// The Beatty sets of (alpha, beta) partition [1, lower(n)].
CheckReport check_complementarity(std::string name, const seq::BeattyPair& pair,
                                  std::int64_t n, Exec exec);

// Both swap routes agree and W is an involution in range.
CheckReport check_swap_routes(std::int64_t n, Exec exec);

// ---------------------------------------------------------------- run_all

struct VerifyConfig {
    std::int64_t n = 1000;       // scan bound for the range checks
    std::int64_t fib_k = 40;     // lemma bound
    std::int64_t cr_kmax = 5;    // Celaya-Ruskey family bound
    Exec exec = Exec::Parallel;
    std::vector<std::string> selected;  // empty = all; exact name or prefix
    std::optional<std::int64_t> fault_index;  // corrupts g_equiv (self-test)
};

// Roster in deterministic execution order for this config.
std::vector<std::string> check_names(const VerifyConfig& config);

// Executes every selected check; throws std::invalid_argument if a selector
// matches nothing.
std::vector<CheckReport> run_all(const VerifyConfig& config);

}  // namespace hoflab::verify
