#include "hoflab/sequences.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace hoflab::seq {

namespace {

const QuadraticSurd& pell_gamma() {
    static const QuadraticSurd g = metallic_gamma(2);  // sqrt2 - 1
    return g;
}

const QuadraticSurd& half_sqrt2() {
    static const QuadraticSurd s(BigInt(0), BigInt(1), BigInt(2), BigInt(2));
    return s;
}

const QuadraticSurd& sqrt3_minus_1() {
    static const QuadraticSurd s(BigInt(-1), BigInt(1), BigInt(1), BigInt(3));
    return s;
}

void require_from(std::int64_t n, std::int64_t lo, const char* what) {
    if (n < lo)
        throw std::invalid_argument(std::string(what) + ": index " + std::to_string(n) +
                                    " below first index " + std::to_string(lo));
}

}  // namespace

std::int64_t hof_g_closed(std::int64_t n) {
    require_from(n, 0, "G");
    return floor_scale(QuadraticSurd::golden_gamma(), n + 1);
}

std::int64_t wythoff_lower(std::int64_t n) {
    require_from(n, 1, "L");
    return floor_scale(QuadraticSurd::golden_phi(), n);
}

std::int64_t wythoff_upper(std::int64_t n) {
    require_from(n, 1, "U");
    return floor_scale(QuadraticSurd::golden_phi2(), n);
}

BigInt wythoff_lower_big(const BigInt& n) {
    if (n < BigInt(1)) throw std::invalid_argument("L: index must be >= 1");
    return floor_scale(QuadraticSurd::golden_phi(), n);
}

BigInt wythoff_upper_big(const BigInt& n) {
    if (n < BigInt(1)) throw std::invalid_argument("U: index must be >= 1");
    return floor_scale(QuadraticSurd::golden_phi2(), n);
}

std::int64_t wythoff_swap(std::int64_t n) {
    require_from(n, 0, "W");
    if (n == 0) return 0;
    const std::int64_t g = hof_g_closed(n);
    return g == hof_g_closed(n - 1) ? g : g + n;
}

std::int64_t wythoff_swap_partner(std::int64_t n) {
    require_from(n, 0, "W");
    if (n == 0) return 0;
    return BeattyPair::golden().swap(n);
}

std::int64_t hof_pell_closed(std::int64_t n) {
    require_from(n, 0, "Hpell");
    return floor_scale(pell_gamma(), n + 1);
}

std::int64_t pell_r_slow(std::int64_t n) {
    require_from(n, 0, "R");
    return floor_scale(half_sqrt2(), n);
}

std::int64_t pell_lower(std::int64_t n) {
    require_from(n, 1, "Lpell");
    return floor_scale(BeattyPair::pell().alpha(), n);
}

std::int64_t pell_upper(std::int64_t n) {
    require_from(n, 1, "Upell");
    return floor_scale(BeattyPair::pell().beta(), n);
}

std::int64_t pell_swap(std::int64_t n) {
    require_from(n, 1, "Wpell");
    return BeattyPair::pell().swap(n);
}

std::int64_t cloitre_closed(std::int64_t n) {
    require_from(n, 0, "cloitre");
    return floor_scale(sqrt3_minus_1(), n + 1);
}

// ---------------------------------------------------------------- BeattyPair

BeattyPair::BeattyPair(QuadraticSurd gamma)
    : gamma_(std::move(gamma)),
      co_gamma_(QuadraticSurd::rational(1) - gamma_),
      alpha_(gamma_.inverse()),
      beta_(co_gamma_.inverse()) {
    if (!gamma_.in_unit_interval())
        throw std::domain_error("BeattyPair: gamma must lie in (0,1)");
    if (gamma_.is_rational())
        throw std::domain_error("BeattyPair: gamma must be irrational");
}

const BeattyPair& BeattyPair::golden() {
    static const BeattyPair p(QuadraticSurd::golden_gamma());
    return p;
}

const BeattyPair& BeattyPair::pell() {
    static const BeattyPair p(pell_gamma());
    return p;
}

std::int64_t BeattyPair::lower(std::int64_t n) const { return floor_scale(alpha_, n); }

std::int64_t BeattyPair::upper(std::int64_t n) const { return floor_scale(beta_, n); }

std::int64_t BeattyPair::lower_rank(std::int64_t x) const {
    return floor_scale(gamma_, x + 1);
}

std::int64_t BeattyPair::upper_rank(std::int64_t x) const {
    return floor_scale(co_gamma_, x + 1);
}

bool BeattyPair::is_lower_value(std::int64_t x) const {
    return lower_rank(x) > lower_rank(x - 1);
}

std::int64_t BeattyPair::swap(std::int64_t x) const {
    if (x < 1) throw std::invalid_argument("BeattyPair::swap: index must be >= 1");
    if (is_lower_value(x)) return upper(lower_rank(x));
    return lower(upper_rank(x));
}

// ------------------------------------------------------- memoized recursions

std::int64_t HofstadterG::at(std::int64_t n) {
    require_from(n, 0, "G");
    while (static_cast<std::int64_t>(memo_.size()) <= n) {
        const std::int64_t i = static_cast<std::int64_t>(memo_.size());
        memo_.push_back(i - memo_[memo_[i - 1]]);
    }
    return memo_[n];
}

CelayaRuskeyH::CelayaRuskeyH(std::int64_t k) : k_(k) {
    if (k < 1) throw std::invalid_argument("CelayaRuskeyH: k must be >= 1");
    memo_.assign(static_cast<std::size_t>(k), 0);  // H(n) = 0 for n < k
}

std::int64_t CelayaRuskeyH::at(std::int64_t n) {
    require_from(n, 0, "Hk");
    while (static_cast<std::int64_t>(memo_.size()) <= n) {
        const std::int64_t i = static_cast<std::int64_t>(memo_.size());
        std::int64_t v = i - k_ + 1;
        for (std::int64_t t = 1; t < k_; ++t) v -= memo_[i - t];
        const std::int64_t inner = memo_[i - k_];
        if (inner < 0 || inner >= i)
            throw std::logic_error("CelayaRuskeyH: nested argument escaped the table");
        v -= memo_[inner];
        memo_.push_back(v);
    }
    return memo_[n];
}

void MarriedPair::extend(std::int64_t n) {
    while (static_cast<std::int64_t>(a_.size()) <= n) {
        const std::int64_t i = static_cast<std::int64_t>(a_.size());
        // b(i) first: its inner index b(i-1) <= i-1 is already known, and
        // a(i) may need b at index a(i-1) == i when i == 1.
        const std::int64_t bi = b_[i - 1];
        if (bi < 0 || bi >= i) throw std::logic_error("married: b argument out of range");
        b_.push_back(i - a_[bi]);
        const std::int64_t ai = a_[i - 1];
        if (ai < 0 || ai > i) throw std::logic_error("married: a argument out of range");
        a_.push_back(i - b_[ai]);
    }
}

std::int64_t MarriedPair::a(std::int64_t n) {
    require_from(n, 0, "a");
    extend(n);
    return a_[n];
}

std::int64_t MarriedPair::b(std::int64_t n) {
    require_from(n, 0, "b");
    extend(n);
    return b_[n];
}

void GreedyF::extend(std::int64_t n) {
    auto is_used = [&](std::int64_t v) {
        return v < static_cast<std::int64_t>(used_.size()) && used_[v];
    };
    while (static_cast<std::int64_t>(vals_.size()) < n) {
        const std::int64_t step = static_cast<std::int64_t>(vals_.size()) + 1;
        const std::int64_t r = ((-sum_) % step + step) % step;
        std::int64_t x = r == 0 ? step : r;
        int probes = 0;
        while (is_used(x)) {
            x += step;
            if (++probes > 64) throw std::logic_error("greedy f: candidate scan ran away");
        }
        if (x >= static_cast<std::int64_t>(used_.size())) used_.resize(x + 64, false);
        used_[x] = true;
        sum_ += x;
        vals_.push_back(x);
    }
}

std::int64_t GreedyF::at(std::int64_t n) {
    require_from(n, 1, "f");
    extend(n);
    return vals_[n - 1];
}

void GreedyZ::extend(std::int64_t n) {
    auto is_used = [&](std::int64_t v) {
        return v < static_cast<std::int64_t>(used_.size()) && used_[v];
    };
    while (static_cast<std::int64_t>(vals_.size()) < n) {
        const std::int64_t idx = static_cast<std::int64_t>(vals_.size()) + 1;
        const std::int64_t mod = idx + 1;
        const std::int64_t sum = sums_.empty() ? 0 : sums_.back();
        const std::int64_t r = ((1 - sum) % mod + mod) % mod;
        std::int64_t x = r == 0 ? mod : r;
        int probes = 0;
        while (is_used(x)) {
            x += mod;
            if (++probes > 64) throw std::logic_error("greedy z: candidate scan ran away");
        }
        if (x >= static_cast<std::int64_t>(used_.size())) used_.resize(x + 64, false);
        used_[x] = true;
        vals_.push_back(x);
        sums_.push_back(sum + x);
    }
}

std::int64_t GreedyZ::z(std::int64_t n) {
    require_from(n, 1, "z");
    extend(n);
    return vals_[n - 1];
}

std::int64_t GreedyZ::m(std::int64_t n) {
    require_from(n, 1, "m");
    extend(n);
    const std::int64_t tail = sums_[n - 1] - vals_[0];  // z(2)+...+z(n)
    if (tail % (n + 1) != 0)
        throw std::logic_error("greedy z: m(n) is not an integer; falsifies part (b)");
    return tail / (n + 1);
}

std::int64_t VRecursion::at(std::int64_t n) {
    require_from(n, 1, "V");
    while (static_cast<std::int64_t>(memo_.size()) <= n) {
        const std::int64_t i = static_cast<std::int64_t>(memo_.size());
        const std::int64_t j1 = i - memo_[i - 1];
        const std::int64_t j2 = i - memo_[i - 4];
        if (j1 < 1 || j1 >= i || j2 < 1 || j2 >= i)
            throw std::logic_error("V: recursion argument escaped [1, n-1]");
        memo_.push_back(memo_[j1] + memo_[j2]);
    }
    return memo_[n];
}

std::int64_t CloitreSeq::at(std::int64_t n) {
    require_from(n, 1, "cloitre");
    while (static_cast<std::int64_t>(memo_.size()) <= n) {
        const std::int64_t i = static_cast<std::int64_t>(memo_.size());
        const std::int64_t inner = memo_[i - 1];
        if (inner < 1 || inner >= i)
            throw std::logic_error("cloitre: recursion argument escaped [1, n-1]");
        memo_.push_back(i - memo_[inner] / 2);
    }
    return memo_[n];
}

std::int64_t SwapAverage::at(std::int64_t n) {
    require_from(n, 0, "Wavg");
    while (static_cast<std::int64_t>(avgs_.size()) <= n) {
        const std::int64_t i = static_cast<std::int64_t>(avgs_.size());
        sum_ += wythoff_swap(i);
        if (sum_ % (i + 1) != 0)
            throw std::logic_error("Wavg: partial sum not divisible; falsifies the averaging theorem");
        avgs_.push_back(sum_ / (i + 1));
    }
    return avgs_[n];
}

// ---------------------------------------------------------------- registry

const std::vector<SequenceInfo>& catalog() {
    static const std::vector<SequenceInfo> entries{
        {Sequence::GClosed, "G", "A005206", 0, false, "Hofstadter G, closed form"},
        {Sequence::GRec, "Grec", "A005206", 0, false, "Hofstadter G, recursion"},
        {Sequence::WythoffL, "L", "A000201", 1, false, "lower Wythoff"},
        {Sequence::WythoffU, "U", "A001950", 1, false, "upper Wythoff"},
        {Sequence::WSwap, "W", "A002251", 0, false, "Wythoff swap"},
        {Sequence::WAvg, "Wavg", "A073869", 0, false, "averaged Wythoff swap"},
        {Sequence::FGreedy, "f", "A019444", 1, false, "Venkatachala greedy"},
        {Sequence::ZGreedy, "z", "", 1, false, "Avdivpahic-Zejnulahi greedy"},
        {Sequence::MAvg, "m", "", 1, false, "Avdivpahic-Zejnulahi average"},
        {Sequence::MarriedA, "a", "A005378", 0, false, "married function a"},
        {Sequence::MarriedB, "b", "A005379", 0, false, "married function b"},
        {Sequence::Hk, "Hk", "", 0, true, "Celaya-Ruskey H for given k"},
        {Sequence::HPell, "Hpell", "A097508", 0, false, "Hofstadter-Pell"},
        {Sequence::RSlow, "R", "A049472", 0, false, "slow Beatty of sqrt2/2"},
        {Sequence::LPell, "Lpell", "A003151", 1, false, "Beatty of 1+sqrt2"},
        {Sequence::UPell, "Upell", "A003152", 1, false, "Beatty of 1+sqrt2/2"},
        {Sequence::WPellSwap, "Wpell", "A109250", 1, false, "Pell pair swap"},
        {Sequence::Cloitre, "cloitre", "A138466", 1, false, "Cloitre recursion"},
        {Sequence::VRec, "V", "A063882", 1, false, "V recursion"},
    };
    return entries;
}

const SequenceInfo& info(Sequence s) {
    for (const auto& e : catalog())
        if (e.which == s) return e;
    throw std::logic_error("sequence missing from catalog");
}

namespace {

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    }
    return true;
}

}  // namespace

std::optional<SequenceId> parse_sequence(std::string_view name,
                                         std::optional<std::int64_t> k) {
    for (const auto& e : catalog()) {
        const bool byname = iequals(name, e.cli_name);
        const bool byoeis = e.oeis[0] != '\0' && iequals(name, e.oeis);
        if (!byname && !byoeis) continue;
        if (e.parameterized) {
            if (!k || *k < 1) return std::nullopt;
            return SequenceId{e.which, *k};
        }
        if (k) return std::nullopt;
        return SequenceId{e.which, 0};
    }
    return std::nullopt;
}

std::vector<std::int64_t> materialize(SequenceId id, std::int64_t from, std::int64_t to) {
    const SequenceInfo& meta = info(id.which);
    if (from < meta.first_index)
        throw std::invalid_argument(std::string("sequence ") + meta.cli_name +
                                    " starts at index " + std::to_string(meta.first_index));
    if (to < from) throw std::invalid_argument("empty range: to < from");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(to - from + 1));
    auto fill = [&](auto&& value_at) {
        for (std::int64_t n = from; n <= to; ++n) out.push_back(value_at(n));
    };
    switch (id.which) {
        case Sequence::GClosed: fill(hof_g_closed); break;
        case Sequence::GRec: {
            HofstadterG g;
            fill([&](std::int64_t n) { return g.at(n); });
            break;
        }
        case Sequence::WythoffL: fill(wythoff_lower); break;
        case Sequence::WythoffU: fill(wythoff_upper); break;
        case Sequence::WSwap: fill(wythoff_swap); break;
        case Sequence::WAvg: {
            SwapAverage w;
            fill([&](std::int64_t n) { return w.at(n); });
            break;
        }
        case Sequence::FGreedy: {
            GreedyF f;
            fill([&](std::int64_t n) { return f.at(n); });
            break;
        }
        case Sequence::ZGreedy: {
            GreedyZ z;
            fill([&](std::int64_t n) { return z.z(n); });
            break;
        }
        case Sequence::MAvg: {
            GreedyZ z;
            fill([&](std::int64_t n) { return z.m(n); });
            break;
        }
        case Sequence::MarriedA: {
            MarriedPair m;
            fill([&](std::int64_t n) { return m.a(n); });
            break;
        }
        case Sequence::MarriedB: {
            MarriedPair m;
            fill([&](std::int64_t n) { return m.b(n); });
            break;
        }
        case Sequence::Hk: {
            CelayaRuskeyH h(id.k);
            fill([&](std::int64_t n) { return h.at(n); });
            break;
        }
        case Sequence::HPell: {
            CelayaRuskeyH h(2);
            fill([&](std::int64_t n) { return h.at(n); });
            break;
        }
        case Sequence::RSlow: fill(pell_r_slow); break;
        case Sequence::LPell: fill(pell_lower); break;
        case Sequence::UPell: fill(pell_upper); break;
        case Sequence::WPellSwap: fill(pell_swap); break;
        case Sequence::Cloitre: {
            CloitreSeq c;
            fill([&](std::int64_t n) { return c.at(n); });
            break;
        }
        case Sequence::VRec: {
            VRecursion v;
            fill([&](std::int64_t n) { return v.at(n); });
            break;
        }
    }
    return out;
}

}  // namespace hoflab::seq
