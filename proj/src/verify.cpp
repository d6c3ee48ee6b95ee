#include "hoflab/verify.hpp"

#include <array>
#include <chrono>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "hoflab/fibword.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hoflab::verify {

using seq::BeattyPair;

namespace {

std::string fmt_range(std::int64_t lo, std::int64_t hi) {
    return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

// Parallel fill of a value table from a thread-pure closed form.
template <class F>
std::vector<std::int64_t> fill_values(std::int64_t lo, std::int64_t hi, Exec exec, F&& fn) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(hi - lo + 1));
#ifdef _OPENMP
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t n = lo; n <= hi; ++n) v[static_cast<std::size_t>(n - lo)] = fn(n);
        return v;
    }
#endif
    for (std::int64_t n = lo; n <= hi; ++n) v[static_cast<std::size_t>(n - lo)] = fn(n);
    return v;
}

using Table = std::shared_ptr<const std::vector<std::int64_t>>;

Table share(std::vector<std::int64_t> v) {
    return std::make_shared<const std::vector<std::int64_t>>(std::move(v));
}

std::string cat2(const char* k1, std::int64_t v1, const char* k2, std::int64_t v2) {
    return std::string(k1) + "=" + std::to_string(v1) + " " + k2 + "=" + std::to_string(v2);
}

}  // namespace

std::string CheckReport::line() const {
    std::ostringstream os;
    os << name;
    for (std::size_t i = name.size(); i < 24; ++i) os << ' ';
    os << ' ' << fmt_range(lo, hi) << " passed=" << passed << " failed=" << failed;
    if (first_counterexample) {
        os << "  first fail at n=" << first_counterexample->index << ": expected "
           << first_counterexample->expected << ", actual " << first_counterexample->actual;
    }
    return os.str();
}

std::string CheckReport::json() const {
    nlohmann::json j;
    j["name"] = name;
    j["lo"] = lo;
    j["hi"] = hi;
    j["passed"] = passed;
    j["failed"] = failed;
    if (first_counterexample) {
        j["counterexample"] = {{"index", first_counterexample->index},
                               {"expected", first_counterexample->expected},
                               {"actual", first_counterexample->actual}};
    } else {
        j["counterexample"] = nullptr;
    }
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string reports_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(nlohmann::json::parse(r.json()));
    return arr.dump(2);
}

CheckReport scan_range(std::string name, std::int64_t lo, std::int64_t hi, Exec exec,
                       const Probe& probe) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.name = std::move(name);
    rep.lo = lo;
    rep.hi = hi;
    if (hi < lo) {
        rep.hi = lo - 1;
        return rep;
    }
    const std::int64_t count = hi - lo + 1;

    std::int64_t failed = 0;
    std::int64_t first_idx = std::numeric_limits<std::int64_t>::max();
    std::string first_exp, first_act;

    auto run_one = [&probe](std::int64_t n, std::string& e, std::string& a) {
        try {
            return probe(n, e, a);
        } catch (const std::exception& ex) {
            e = "no exception";
            a = std::string("exception: ") + ex.what();
            return false;
        }
    };

#ifdef _OPENMP
    if (exec == Exec::Parallel && count > 1) {
#pragma omp parallel
        {
            std::int64_t l_failed = 0;
            std::int64_t l_idx = std::numeric_limits<std::int64_t>::max();
            std::string l_exp, l_act;
#pragma omp for schedule(static) nowait
            for (std::int64_t n = lo; n <= hi; ++n) {
                std::string e, a;
                if (!run_one(n, e, a)) {
                    ++l_failed;
                    if (n < l_idx) {
                        l_idx = n;
                        l_exp = std::move(e);
                        l_act = std::move(a);
                    }
                }
            }
#pragma omp critical
            {
                failed += l_failed;
                if (l_idx < first_idx) {
                    first_idx = l_idx;
                    first_exp = std::move(l_exp);
                    first_act = std::move(l_act);
                }
            }
        }
    } else
#endif
    {
        for (std::int64_t n = lo; n <= hi; ++n) {
            std::string e, a;
            if (!run_one(n, e, a)) {
                ++failed;
                if (n < first_idx) {
                    first_idx = n;
                    first_exp = std::move(e);
                    first_act = std::move(a);
                }
            }
        }
    }

    rep.failed = failed;
    rep.passed = count - failed;
    if (failed > 0) rep.first_counterexample = Counterexample{first_idx, first_exp, first_act};
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

// ------------------------------------------------------------------ checks

CheckReport check_g_equiv(std::int64_t n, Exec exec, std::optional<std::int64_t> fault_index) {
    Table rec = share(seq::materialize({seq::Sequence::GRec}, 0, n));
    const std::int64_t fault = fault_index.value_or(-1);
    return scan_range("g_equiv", 0, n, exec,
                      [rec, fault](std::int64_t i, std::string& e, std::string& a) {
                          const std::int64_t want = (*rec)[static_cast<std::size_t>(i)];
                          std::int64_t got = seq::hof_g_closed(i);
                          if (i == fault) ++got;  // harness self-test corruption
                          if (want == got) return true;
                          e = std::to_string(want);
                          a = std::to_string(got);
                          return false;
                      });
}

CheckReport check_ks_split(std::string name, const QuadraticSurd& gamma, std::int64_t n,
                           Exec exec) {
    // Frozen alignment (resolved empirically, spec Open Question): classify
    // n >= 1 by the increment into n; the constant-step set is exactly
    // {floor(m/(1-gamma)) : m >= 1} and the unit-step set is
    // {floor(m/gamma) : m >= 1}, where m is the running rank of n in its
    // set. For the golden gamma this reproduces {2,5,7,10,...} = U-values.
    auto shared_gamma = std::make_shared<const QuadraticSurd>(gamma);
    auto co = std::make_shared<const QuadraticSurd>(QuadraticSurd::rational(1) - gamma);
    auto alpha = std::make_shared<const QuadraticSurd>(gamma.inverse());
    auto beta = std::make_shared<const QuadraticSurd>(co->inverse());
    return scan_range(
        std::move(name), 1, n, exec,
        [shared_gamma, co, alpha, beta](std::int64_t i, std::string& e, std::string& a) {
            const std::int64_t s1 = floor_scale(*shared_gamma, i + 1);
            const std::int64_t s0 = floor_scale(*shared_gamma, i);
            const std::int64_t d = s1 - s0;
            if (d != 0 && d != 1) {
                e = "increment in {0,1}";
                a = "increment " + std::to_string(d);
                return false;
            }
            if (d == 0) {
                const std::int64_t m = floor_scale(*co, i + 1);
                const std::int64_t member = floor_scale(*beta, m);
                if (member == i) return true;
                e = "constant-step member floor(" + std::to_string(m) + "*beta) = " +
                    std::to_string(i);
                a = std::to_string(member);
                return false;
            }
            const std::int64_t m = floor_scale(*shared_gamma, i + 1);
            const std::int64_t member = floor_scale(*alpha, m);
            if (member == i) return true;
            e = "unit-step member floor(" + std::to_string(m) + "*alpha) = " + std::to_string(i);
            a = std::to_string(member);
            return false;
        });
}

CheckReport check_slu(std::string name, const QuadraticSurd& gamma, std::int64_t n, Exec exec) {
    auto g = std::make_shared<const QuadraticSurd>(gamma);
    auto alpha = std::make_shared<const QuadraticSurd>(gamma.inverse());
    auto co = QuadraticSurd::rational(1) - gamma;
    auto beta = std::make_shared<const QuadraticSurd>(co.inverse());
    auto ratio = std::make_shared<const QuadraticSurd>(gamma / co);
    return scan_range(std::move(name), 1, n, exec,
                      [g, alpha, beta, ratio](std::int64_t i, std::string& e, std::string& a) {
                          const std::int64_t lo_i = floor_scale(*alpha, i);
                          const std::int64_t up_i = floor_scale(*beta, i);
                          const std::int64_t s_lo = floor_scale(*g, lo_i + 1);
                          const std::int64_t s_up = floor_scale(*g, up_i + 1);
                          const std::int64_t want_up = floor_scale(*ratio, i);
                          if (s_lo == i && s_up == want_up) return true;
                          e = cat2("s(L(n))", i, "s(U(n))", want_up);
                          a = cat2("s(L(n))", s_lo, "s(U(n))", s_up);
                          return false;
                      });
}

CheckReport check_avg_theorem(std::int64_t n, Exec exec) {
    std::vector<std::int64_t> w = fill_values(0, n, exec, seq::wythoff_swap);
    std::vector<std::int64_t> pref(w.size());
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        acc += w[i];
        pref[i] = acc;
    }
    Table tw = share(std::move(w));
    Table tp = share(std::move(pref));
    return scan_range(
        "avg_theorem", 0, n, exec,
        [tw, tp](std::int64_t i, std::string& e, std::string& a) {
            const std::int64_t sum = (*tp)[static_cast<std::size_t>(i)];
            if (sum % (i + 1) != 0) {
                e = "sum of W(0..n) divisible by n+1";
                a = std::to_string(sum) + " % " + std::to_string(i + 1) + " != 0";
                return false;
            }
            const std::int64_t avg = sum / (i + 1);
            const std::int64_t g = seq::hof_g_closed(i);
            if (avg != g) {
                e = "Wavg(n) = G(n) = " + std::to_string(g);
                a = std::to_string(avg);
                return false;
            }
            if (i >= 1) {
                const std::int64_t lhs = (i + 1) * g - i * seq::hof_g_closed(i - 1);
                const std::int64_t wn = (*tw)[static_cast<std::size_t>(i)];
                if (lhs != wn) {
                    e = "(n+1)G(n)-nG(n-1) = W(n) = " + std::to_string(wn);
                    a = std::to_string(lhs);
                    return false;
                }
            }
            return true;
        });
}

CheckReport check_scatter_lines(std::int64_t n, Exec exec) {
    auto gamma = std::make_shared<const QuadraticSurd>(QuadraticSurd::golden_gamma());
    auto phi = std::make_shared<const QuadraticSurd>(QuadraticSurd::golden_phi());
    return scan_range("scatter_lines", 1, n, exec,
                      [gamma, phi](std::int64_t i, std::string& e, std::string& a) {
                          const std::int64_t un = seq::wythoff_upper(i);
                          const std::int64_t ln = seq::wythoff_lower(i);
                          const std::int64_t w_u = seq::wythoff_swap(un);
                          const std::int64_t w_l = seq::wythoff_swap(ln);
                          const std::int64_t low_line = floor_scale(*gamma, un);
                          const std::int64_t up_line = floor_scale(*phi, ln) + 1;
                          if (w_u == low_line && w_l == up_line) return true;
                          e = cat2("W(U(n))", low_line, "W(L(n))", up_line);
                          a = cat2("W(U(n))", w_u, "W(L(n))", w_l);
                          return false;
                      });
}

CheckReport check_fib_lemma(std::int64_t kmax, Exec exec) {
    return scan_range(
        "fib_lemma", 1, kmax, exec, [](std::int64_t k, std::string& e, std::string& a) {
            const auto lemma = fibword::wythoff_at_fib(static_cast<int>(k));
            const BigInt f_even = fibword::fib(static_cast<int>(2 * k));
            const BigInt f_odd = fibword::fib(static_cast<int>(2 * k - 1));
            const BigInt le = seq::wythoff_lower_big(f_even);
            const BigInt ue = seq::wythoff_upper_big(f_even);
            const BigInt lo_ = seq::wythoff_lower_big(f_odd);
            const BigInt uo = seq::wythoff_upper_big(f_odd);
            if (le == lemma.lower_at_even && ue == lemma.upper_at_even &&
                lo_ == lemma.lower_at_odd && uo == lemma.upper_at_odd)
                return true;
            e = "(" + lemma.lower_at_even.str() + ", " + lemma.upper_at_even.str() + ", " +
                lemma.lower_at_odd.str() + ", " + lemma.upper_at_odd.str() + ")";
            a = "(" + le.str() + ", " + ue.str() + ", " + lo_.str() + ", " + uo.str() + ")";
            return false;
        });
}

namespace {

// Exception tables for the odd-indexed Fibonacci laws, values <= bound.
struct AzExceptions {
    // n = F_{2k+1}-1 -> {z, W, m, Wavg}; n = F_{2k+1} -> {z, W}
    std::unordered_map<std::int64_t, std::array<std::int64_t, 4>> at_minus1;
    std::unordered_map<std::int64_t, std::array<std::int64_t, 2>> at_fib;
};

AzExceptions az_exceptions(std::int64_t bound) {
    AzExceptions out;
    for (int k = 2;; ++k) {
        if (2 * k + 2 > 92) break;
        const std::int64_t f = fibword::fib_i64(2 * k + 1);
        if (f - 1 > bound) break;
        const std::int64_t f_lo = fibword::fib_i64(2 * k);
        const std::int64_t f_hi = fibword::fib_i64(2 * k + 2);
        out.at_minus1[f - 1] = {f_lo - 1, f_hi - 1, f_lo - 1, f_lo};
        if (f <= bound) out.at_fib[f] = {f_hi, f_lo};
    }
    return out;
}

}  // namespace

CheckReport check_az(std::int64_t n, Exec exec) {
    seq::GreedyZ gen;
    std::vector<std::int64_t> zs(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int64_t> ms(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 1; i <= n; ++i) {
        zs[static_cast<std::size_t>(i)] = gen.z(i);
        ms[static_cast<std::size_t>(i)] = gen.m(i);
    }
    Table tz = share(std::move(zs));
    Table tm = share(std::move(ms));
    // Wavg through its definition (partial sums), not the closed form.
    seq::SwapAverage avg_gen;
    std::vector<std::int64_t> avgs(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 0; i <= n; ++i) avgs[static_cast<std::size_t>(i)] = avg_gen.at(i);
    Table ta = share(std::move(avgs));
    auto exc = std::make_shared<const AzExceptions>(az_exceptions(n));

    return scan_range(
        "az", 1, n, exec, [tz, tm, ta, exc](std::int64_t i, std::string& e, std::string& a) {
            const std::int64_t z = (*tz)[static_cast<std::size_t>(i)];
            const std::int64_t m = (*tm)[static_cast<std::size_t>(i)];
            const std::int64_t w = seq::wythoff_swap(i);
            const std::int64_t wavg = (*ta)[static_cast<std::size_t>(i)];
            auto fail = [&](const std::string& want, const std::string& got) {
                e = want;
                a = got;
                return false;
            };
            if (i == 1) {  // greedy overrides the k=1 formula overlap
                if (z == 1 && w == 2 && m == 0 && wavg == 1) return true;
                return fail("z=1 W=2 m=0 Wavg=1", "z=" + std::to_string(z) +
                                                       " W=" + std::to_string(w) +
                                                       " m=" + std::to_string(m) +
                                                       " Wavg=" + std::to_string(wavg));
            }
            if (i == 2) {
                if (z == 3 && w == 1 && m == 1 && wavg == 1) return true;
                return fail("z=3 W=1 m=1 Wavg=1", "z=" + std::to_string(z) +
                                                       " W=" + std::to_string(w) +
                                                       " m=" + std::to_string(m) +
                                                       " Wavg=" + std::to_string(wavg));
            }
            if (auto it = exc->at_minus1.find(i); it != exc->at_minus1.end()) {
                const auto& v = it->second;
                if (z == v[0] && w == v[1] && m == v[2] && wavg == v[3]) return true;
                return fail("exception z=" + std::to_string(v[0]) + " W=" + std::to_string(v[1]) +
                                " m=" + std::to_string(v[2]) + " Wavg=" + std::to_string(v[3]),
                            "z=" + std::to_string(z) + " W=" + std::to_string(w) +
                                " m=" + std::to_string(m) + " Wavg=" + std::to_string(wavg));
            }
            if (auto it = exc->at_fib.find(i); it != exc->at_fib.end()) {
                const auto& v = it->second;
                if (z == v[0] && w == v[1] && m == wavg) return true;
                return fail("exception z=" + std::to_string(v[0]) + " W=" + std::to_string(v[1]) +
                                " m=Wavg",
                            cat2("z", z, "W", w) + " m=" + std::to_string(m) +
                                " Wavg=" + std::to_string(wavg));
            }
            if (z == w && m == wavg) return true;
            return fail("z=W and m=Wavg", "z=" + std::to_string(z) + " W=" + std::to_string(w) +
                                              " m=" + std::to_string(m) +
                                              " Wavg=" + std::to_string(wavg));
        });
}

CheckReport check_stoll(std::int64_t n, Exec exec) {
    seq::MarriedPair married;
    std::vector<std::int64_t> as(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int64_t> bs(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 0; i <= n; ++i) {
        as[static_cast<std::size_t>(i)] = married.a(i);
        bs[static_cast<std::size_t>(i)] = married.b(i);
    }
    seq::GreedyZ gen;
    std::vector<std::int64_t> ms(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t i = 1; i <= n; ++i) ms[static_cast<std::size_t>(i)] = gen.m(i);

    std::unordered_set<std::int64_t> a_exc, b_exc;
    for (int k = 2; 2 * k <= 92; ++k) {
        const std::int64_t f = fibword::fib_i64(2 * k);
        if (f - 1 > n) break;
        a_exc.insert(f - 1);
    }
    for (int k = 1; 2 * k + 1 <= 92; ++k) {
        const std::int64_t f = fibword::fib_i64(2 * k + 1);
        if (f - 1 > n) break;
        b_exc.insert(f - 1);
    }

    Table ta = share(std::move(as));
    Table tb = share(std::move(bs));
    Table tm = share(std::move(ms));
    auto ea = std::make_shared<const std::unordered_set<std::int64_t>>(std::move(a_exc));
    auto eb = std::make_shared<const std::unordered_set<std::int64_t>>(std::move(b_exc));

    return scan_range(
        "stoll", 1, n, exec,
        [ta, tb, tm, ea, eb](std::int64_t i, std::string& e, std::string& a) {
            const std::int64_t g = seq::hof_g_closed(i);
            const std::int64_t want_a = ea->count(i) ? g + 1 : g;
            const std::int64_t want_b = eb->count(i) ? g - 1 : g;
            const std::int64_t got_a = (*ta)[static_cast<std::size_t>(i)];
            const std::int64_t got_b = (*tb)[static_cast<std::size_t>(i)];
            const std::int64_t got_m = (*tm)[static_cast<std::size_t>(i)];
            if (got_a == want_a && got_b == want_b && got_b == got_m) return true;
            e = cat2("a", want_a, "b", want_b) + " b=m";
            a = cat2("a", got_a, "b", got_b) + " m=" + std::to_string(got_m);
            return false;
        });
}

CheckReport check_greedy_f(std::int64_t n, Exec exec) {
    seq::GreedyF gen;
    std::vector<std::int64_t> fs(static_cast<std::size_t>(n) + 2, 0);
    for (std::int64_t i = 1; i <= n + 1; ++i) fs[static_cast<std::size_t>(i)] = gen.at(i);
    Table tf = share(std::move(fs));
    return scan_range("greedy_f", 1, n, exec,
                      [tf](std::int64_t i, std::string& e, std::string& a) {
                          const std::int64_t w = seq::wythoff_swap(i);
                          const std::int64_t f_next = (*tf)[static_cast<std::size_t>(i) + 1];
                          if (w == f_next - 1) return true;
                          e = "W(n) = f(n+1)-1 = " + std::to_string(f_next - 1);
                          a = std::to_string(w);
                          return false;
                      });
}

CheckReport check_cr(std::int64_t k, std::int64_t n, Exec exec) {
    Table th = share(seq::materialize({seq::Sequence::Hk, k}, 0, n));
    auto gamma = std::make_shared<const QuadraticSurd>(metallic_gamma(k));
    return scan_range("cr_k" + std::to_string(k), 1, n, exec,
                      [th, gamma](std::int64_t i, std::string& e, std::string& a) {
                          const std::int64_t rec = (*th)[static_cast<std::size_t>(i)];
                          const std::int64_t closed = floor_scale(*gamma, i + 1);
                          if (rec == closed) return true;
                          e = "floor((n+1)*gamma_k) = " + std::to_string(closed);
                          a = std::to_string(rec);
                          return false;
                      });
}

CheckReport check_pell_listing(Exec exec) {
    // H for k = 2, first 26 values as printed in the source text.
    static const std::int64_t expected[] = {0, 0, 1, 1, 2, 2, 2, 3, 3, 4, 4, 4, 5,
                                            5, 6, 6, 7, 7, 7, 8, 8, 9, 9, 9, 10, 10};
    Table th = share(seq::materialize({seq::Sequence::HPell}, 0, 25));
    return scan_range("pell_listing", 0, 25, exec,
                      [th](std::int64_t i, std::string& e, std::string& a) {
                          if ((*th)[static_cast<std::size_t>(i)] == expected[i]) return true;
                          e = std::to_string(expected[i]);
                          a = std::to_string((*th)[static_cast<std::size_t>(i)]);
                          return false;
                      });
}

CheckReport check_cloitre(std::int64_t n, Exec exec) {
    Table tc = share(seq::materialize({seq::Sequence::Cloitre}, 1, n));
    return scan_range("cloitre", 1, n, exec,
                      [tc](std::int64_t i, std::string& e, std::string& a) {
                          const std::int64_t rec = (*tc)[static_cast<std::size_t>(i - 1)];
                          const std::int64_t closed = seq::cloitre_closed(i);
                          if (rec == closed) return true;
                          e = "floor((n+1)(sqrt3-1)) = " + std::to_string(closed);
                          a = std::to_string(rec);
                          return false;
                      });
}

CheckReport check_pell(std::int64_t n, Exec exec) {
    const std::int64_t max_index = seq::pell_lower(n);
    Table th = share(seq::materialize({seq::Sequence::HPell}, 0, max_index));
    return scan_range("pell", 1, n, exec,
                      [th](std::int64_t i, std::string& e, std::string& a) {
                          const std::int64_t lp = seq::pell_lower(i);
                          const std::int64_t up = seq::pell_upper(i);
                          const std::int64_t h_l = (*th)[static_cast<std::size_t>(lp)];
                          const std::int64_t h_u = (*th)[static_cast<std::size_t>(up)];
                          const std::int64_t r = seq::pell_r_slow(i);
                          if (h_l == i && h_u == r) return true;
                          e = cat2("H(Lp(n))", i, "H(Up(n))", r);
                          a = cat2("H(Lp(n))", h_l, "H(Up(n))", h_u);
                          return false;
                      });
}

CheckReport check_pell_swap_prefix(Exec exec) {
    static const std::int64_t expected[] = {2,  1,  4, 3,  7,  9,  5,  12, 6,
                                            14, 16, 8, 19, 10, 21, 11, 24, 26};
    return scan_range("pell_swap_prefix", 1, 18, exec,
                      [](std::int64_t i, std::string& e, std::string& a) {
                          const std::int64_t got = seq::pell_swap(i);
                          if (got == expected[i - 1]) return true;
                          e = std::to_string(expected[i - 1]);
                          a = std::to_string(got);
                          return false;
                      });
}

CheckReport check_complementarity(std::string name, const BeattyPair& pair, std::int64_t n,
                                  Exec exec) {
    const std::int64_t m = pair.lower(n);
    return scan_range(
        std::move(name), 1, m, exec, [&pair](std::int64_t x, std::string& e, std::string& a) {
            const int in_lower = pair.lower_rank(x) > pair.lower_rank(x - 1) ? 1 : 0;
            const int in_upper = pair.upper_rank(x) > pair.upper_rank(x - 1) ? 1 : 0;
            if (in_lower + in_upper != 1) {
                e = "exactly one of L,U covers x";
                a = in_lower + in_upper == 0 ? "gap (neither)" : "collision (both)";
                return false;
            }
            const std::int64_t rank = in_lower ? pair.lower_rank(x) : pair.upper_rank(x);
            const std::int64_t back = in_lower ? pair.lower(rank) : pair.upper(rank);
            if (back == x) return true;
            e = "member at rank " + std::to_string(rank) + " = " + std::to_string(x);
            a = std::to_string(back);
            return false;
        });
}

CheckReport check_swap_routes(std::int64_t n, Exec exec) {
    return scan_range("swap_routes", 1, n, exec,
                      [](std::int64_t i, std::string& e, std::string& a) {
                          const std::int64_t inc = seq::wythoff_swap(i);
                          const std::int64_t par = seq::wythoff_swap_partner(i);
                          if (inc != par) {
                              e = "increment route " + std::to_string(inc);
                              a = "partner route " + std::to_string(par);
                              return false;
                          }
                          const std::int64_t back = seq::wythoff_swap(inc);
                          if (back == i) return true;
                          e = "W(W(n)) = " + std::to_string(i);
                          a = std::to_string(back);
                          return false;
                      });
}

// ---------------------------------------------------------------- run_all

namespace {

struct RosterItem {
    std::string name;
    std::function<CheckReport()> run;
};

std::vector<RosterItem> roster(const VerifyConfig& cfg) {
    std::vector<RosterItem> items;
    const Exec ex = cfg.exec;
    const std::int64_t n = cfg.n;
    items.push_back({"g_equiv", [=] { return check_g_equiv(n, ex, cfg.fault_index); }});
    items.push_back({"ks_split_golden", [=] {
                         return check_ks_split("ks_split_golden",
                                               QuadraticSurd::golden_gamma(), n, ex);
                     }});
    items.push_back({"ks_split_pell", [=] {
                         return check_ks_split("ks_split_pell", metallic_gamma(2), n, ex);
                     }});
    items.push_back({"slu_golden", [=] {
                         return check_slu("slu_golden", QuadraticSurd::golden_gamma(), n, ex);
                     }});
    items.push_back(
        {"slu_pell", [=] { return check_slu("slu_pell", metallic_gamma(2), n, ex); }});
    items.push_back({"avg_theorem", [=] { return check_avg_theorem(n, ex); }});
    items.push_back({"scatter_lines", [=] { return check_scatter_lines(n, ex); }});
    items.push_back({"fib_lemma", [=] { return check_fib_lemma(cfg.fib_k, ex); }});
    items.push_back({"az", [=] { return check_az(n, ex); }});
    items.push_back({"stoll", [=] { return check_stoll(n, ex); }});
    items.push_back({"greedy_f", [=] { return check_greedy_f(n, ex); }});
    for (std::int64_t k = 1; k <= cfg.cr_kmax; ++k)
        items.push_back({"cr_k" + std::to_string(k), [=] { return check_cr(k, n, ex); }});
    items.push_back({"pell_listing", [=] { return check_pell_listing(ex); }});
    items.push_back({"cloitre", [=] { return check_cloitre(n, ex); }});
    items.push_back({"pell", [=] { return check_pell(n, ex); }});
    items.push_back({"pell_swap_prefix", [=] { return check_pell_swap_prefix(ex); }});
    items.push_back({"complementarity_golden", [=] {
                         return check_complementarity("complementarity_golden",
                                                      BeattyPair::golden(), n, ex);
                     }});
    items.push_back({"complementarity_pell", [=] {
                         return check_complementarity("complementarity_pell",
                                                      BeattyPair::pell(), n, ex);
                     }});
    items.push_back({"swap_routes", [=] { return check_swap_routes(n, ex); }});
    return items;
}

bool selected(const std::string& name, const std::vector<std::string>& selectors) {
    if (selectors.empty()) return true;
    for (const auto& s : selectors) {
        if (name == s || (name.size() > s.size() && name.compare(0, s.size(), s) == 0))
            return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> check_names(const VerifyConfig& config) {
    std::vector<std::string> names;
    for (const auto& item : roster(config)) names.push_back(item.name);
    return names;
}

std::vector<CheckReport> run_all(const VerifyConfig& config) {
    const auto items = roster(config);
    for (const auto& sel : config.selected) {
        bool any = false;
        for (const auto& item : items)
            if (selected(item.name, {sel})) any = true;
        if (!any) throw std::invalid_argument("unknown check: " + sel);
    }
    std::vector<CheckReport> reports;
    for (const auto& item : items) {
        if (!selected(item.name, config.selected)) continue;
        reports.push_back(item.run());
    }
    return reports;
}

}  // namespace hoflab::verify
