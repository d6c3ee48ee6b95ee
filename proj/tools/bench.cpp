// Benchmark: times every range check under the serial reference kernel and
// the OpenMP kernel on the same inputs, verifies the two reports agree, and
// prints the comparison.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hoflab/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using hoflab::verify::CheckReport;
using hoflab::verify::Exec;
using hoflab::verify::VerifyConfig;

namespace {

bool same_outcome(const CheckReport& a, const CheckReport& b) {
    if (a.name != b.name || a.lo != b.lo || a.hi != b.hi || a.passed != b.passed ||
        a.failed != b.failed)
        return false;
    if (a.first_counterexample.has_value() != b.first_counterexample.has_value()) return false;
    if (a.first_counterexample &&
        (a.first_counterexample->index != b.first_counterexample->index ||
         a.first_counterexample->expected != b.first_counterexample->expected ||
         a.first_counterexample->actual != b.first_counterexample->actual))
        return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel comparison"};
    std::int64_t n = 200000;
    int repeat = 1;
    std::vector<std::string> checks;
    app.add_option("--to", n, "index range bound")->capture_default_str();
    app.add_option("--repeat", repeat, "timing repetitions, best-of")->capture_default_str();
    app.add_option("--check", checks, "check name or prefix (repeatable)");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; \"parallel\" runs are serial\n");
#endif
    std::printf("range bound: %lld, best of %d run(s)\n\n", static_cast<long long>(n), repeat);
    std::printf("%-24s %12s %12s %9s  %s\n", "check", "serial ms", "parallel ms", "speedup",
                "agree");

    VerifyConfig base;
    base.n = n;
    base.selected = checks;

    double total_serial = 0.0, total_parallel = 0.0;
    bool all_agree = true;

    VerifyConfig cfg_serial = base;
    cfg_serial.exec = Exec::Serial;
    VerifyConfig cfg_parallel = base;
    cfg_parallel.exec = Exec::Parallel;

    std::vector<CheckReport> serial_best, parallel_best;
    for (int r = 0; r < repeat; ++r) {
        auto s = hoflab::verify::run_all(cfg_serial);
        auto p = hoflab::verify::run_all(cfg_parallel);
        if (r == 0) {
            serial_best = std::move(s);
            parallel_best = std::move(p);
        } else {
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i].elapsed_ms < serial_best[i].elapsed_ms) serial_best[i] = s[i];
                if (p[i].elapsed_ms < parallel_best[i].elapsed_ms) parallel_best[i] = p[i];
            }
        }
    }

    for (std::size_t i = 0; i < serial_best.size(); ++i) {
        const auto& s = serial_best[i];
        const auto& p = parallel_best[i];
        const bool agree = same_outcome(s, p);
        all_agree = all_agree && agree;
        total_serial += s.elapsed_ms;
        total_parallel += p.elapsed_ms;
        std::printf("%-24s %12.2f %12.2f %8.2fx  %s%s\n", s.name.c_str(), s.elapsed_ms,
                    p.elapsed_ms, p.elapsed_ms > 0 ? s.elapsed_ms / p.elapsed_ms : 0.0,
                    agree ? "yes" : "NO", s.failed ? "  [check FAILED]" : "");
    }
    std::printf("\n%-24s %12.2f %12.2f %8.2fx\n", "total", total_serial, total_parallel,
                total_parallel > 0 ? total_serial / total_parallel : 0.0);
    if (!all_agree) {
        std::printf("serial and parallel kernels disagree\n");
        return 1;
    }
    return 0;
}
