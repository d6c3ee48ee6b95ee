// hoflab: generate the sequences, run the verification suite, emit the
// swap-sequence scatter data, and diff sequences against OEIS b-files.
//
// Exit codes: 0 success, 1 verification/diff/I-O failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hoflab/oeis.hpp"
#include "hoflab/sequences.hpp"
#include "hoflab/surd.hpp"
#include "hoflab/verify.hpp"

namespace {

using namespace hoflab;

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;

    bool open(const std::string& path) {
        if (path.empty()) return true;
        file.open(path, std::ios::binary);
        if (!file) {
            std::cerr << "hoflab: cannot open output file " << path << "\n";
            return false;
        }
        os = &file;
        return true;
    }
};

int cmd_gen(const std::string& name, std::optional<std::int64_t> k, std::int64_t from,
            std::int64_t to, const std::string& format, const std::string& out_path) {
    const auto id = seq::parse_sequence(name, k);
    if (!id) {
        std::cerr << "hoflab: unknown sequence \"" << name << "\""
                  << (k ? " (or --k not applicable)" : " (missing --k?)")
                  << "; see `hoflab gen --help`\n";
        return 2;
    }
    if (from > to) {
        std::cerr << "hoflab: --from must be <= --to\n";
        return 2;
    }
    std::vector<std::int64_t> values;
    try {
        values = seq::materialize(*id, from, to);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "hoflab: " << ex.what() << "\n";
        return 2;
    }
    OutputTarget out;
    if (!out.open(out_path)) return 1;
    if (format == "csv") {
        *out.os << "n,value\n";
        for (std::size_t i = 0; i < values.size(); ++i)
            *out.os << from + static_cast<std::int64_t>(i) << ',' << values[i] << '\n';
    } else {
        for (const auto v : values) *out.os << v << '\n';
    }
    out.os->flush();
    return out.os->good() ? 0 : 1;
}

int cmd_verify(const verify::VerifyConfig& cfg, const std::string& format,
               const std::string& out_path) {
    std::vector<verify::CheckReport> reports;
    try {
        reports = verify::run_all(cfg);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "hoflab: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "hoflab: verification aborted: " << ex.what() << "\n";
        return 1;
    }
    OutputTarget out;
    if (!out.open(out_path)) return 1;
    bool all_ok = true;
    if (format == "json") {
        *out.os << verify::reports_json(reports) << '\n';
        for (const auto& r : reports) all_ok = all_ok && r.ok();
    } else {
        for (const auto& r : reports) {
            *out.os << r.line() << '\n';
            all_ok = all_ok && r.ok();
        }
    }
    out.os->flush();
    if (!out.os->good()) return 1;
    return all_ok ? 0 : 1;
}

int cmd_scatter(std::int64_t to, const std::string& out_path) {
    OutputTarget out;
    if (!out.open(out_path)) return 1;
    *out.os << "n,W,lower_line,upper_line\n";
    const auto& gamma = QuadraticSurd::golden_gamma();
    const auto& phi = QuadraticSurd::golden_phi();
    for (std::int64_t n = 1; n <= to; ++n) {
        *out.os << n << ',' << seq::wythoff_swap(n) << ',' << floor_scale(gamma, n) << ','
                << floor_scale(phi, n) + 1 << '\n';
    }
    out.os->flush();
    return out.os->good() ? 0 : 1;
}

int cmd_oeis_diff(const std::string& name, std::optional<std::int64_t> k, std::string id,
                  std::int64_t limit, std::int64_t shift, bool online,
                  const std::string& fixtures, const std::string& cache,
                  const std::string& base_url) {
    const auto sid = seq::parse_sequence(name, k);
    if (!sid) {
        std::cerr << "hoflab: unknown sequence \"" << name << "\"\n";
        return 2;
    }
    const auto& meta = seq::info(sid->which);
    if (id.empty()) {
        id = meta.oeis;
        if (id.empty()) {
            std::cerr << "hoflab: sequence " << meta.cli_name
                      << " has no catalogued A-number; pass --id\n";
            return 2;
        }
    }
    oeis::FetchOptions opts;
    opts.mode = online ? oeis::FetchMode::Online : oeis::FetchMode::Offline;
    if (!fixtures.empty()) opts.fixture_dir = fixtures;
    if (!cache.empty()) opts.cache_dir = cache;
    if (!base_url.empty()) opts.base_url = base_url;

    try {
        const std::string norm = oeis::normalize_id(id);
        const oeis::BFile bfile = oeis::fetch_bfile(norm, opts);
        bool truncated = false;
        auto value_at = [&](std::int64_t n) { return BigInt(seq::materialize(*sid, n, n)[0]); };
        const auto report =
            oeis::diff(value_at, meta.first_index, "oeis_" + norm + "_" + meta.cli_name, bfile,
                       {shift}, limit, &truncated);
        if (truncated)
            std::cerr << "hoflab: warning: overlap shorter than --limit; diff truncated at "
                      << report.hi << "\n";
        std::cout << report.line() << '\n';
        return report.ok() ? 0 : 1;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "hoflab: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "hoflab: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Wythoff/Hofstadter sequence laboratory"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "print a sequence range");
    std::string gen_name;
    std::int64_t gen_from = 0, gen_to = 0, gen_k = 0;
    std::string gen_format = "plain", gen_out;
    gen->add_option("sequence", gen_name, "sequence name or A-number")->required();
    gen->add_option("--from", gen_from, "first index")->required();
    gen->add_option("--to", gen_to, "last index")->required();
    auto* gen_kopt = gen->add_option("--k", gen_k, "parameter for Hk");
    gen->add_option("--format", gen_format, "plain|csv")
        ->check(CLI::IsMember({"plain", "csv"}));
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // verify
    auto* ver = app.add_subcommand("verify", "run the theorem checks");
    verify::VerifyConfig cfg;
    std::vector<std::string> checks;
    bool serial = false;
    std::int64_t fault = -1;
    std::string ver_format = "plain", ver_out;
    ver->add_option("--to", cfg.n, "index range bound")->capture_default_str();
    ver->add_option("--check", checks, "check name or prefix (repeatable)");
    ver->add_option("--fib-k", cfg.fib_k, "Fibonacci lemma bound")->capture_default_str();
    ver->add_option("--cr-kmax", cfg.cr_kmax, "Celaya-Ruskey family bound")
        ->capture_default_str();
    ver->add_flag("--serial", serial, "run the serial reference kernels");
    ver->add_option("--format", ver_format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));
    ver->add_option("--out", ver_out, "output path (default stdout)");
    auto* fault_opt = ver->add_option("--inject-fault", fault, "harness self-test: corrupt one value");
    fault_opt->group("");  // hidden

    // scatter
    auto* sc = app.add_subcommand("scatter", "emit (n, W(n)) scatter data with the two line predictions");
    std::int64_t sc_to = 68;
    std::string sc_out;
    sc->add_option("--to", sc_to, "last index")->capture_default_str();
    sc->add_option("--out", sc_out, "output path (default stdout)");

    // oeis-diff
    auto* od = app.add_subcommand("oeis-diff", "diff a sequence against an OEIS b-file");
    std::string od_seq, od_id, od_fixtures, od_cache, od_base;
    std::int64_t od_limit = 1000, od_shift = 0, od_k = 0;
    bool od_online = false;
    od->add_option("--seq", od_seq, "sequence name")->required();
    od->add_option("--id", od_id, "A-number (default: the sequence's catalogued id)");
    od->add_option("--k", od_k, "parameter for Hk");
    od->add_option("--limit", od_limit, "max entries to compare")->capture_default_str();
    od->add_option("--shift", od_shift, "computed index n maps to b-file index n+shift")
        ->capture_default_str();
    bool od_offline = false;
    auto* online_flag = od->add_flag("--online", od_online, "allow HTTP fetch (writes to the cache)");
    od->add_flag("--offline", od_offline, "fixtures and cache only (the default)")
        ->excludes(online_flag);
    od->add_option("--fixtures", od_fixtures, "fixture directory (default $HOFLAB_FIXTURE_DIR or ./fixtures)");
    od->add_option("--cache", od_cache, "cache directory (default $HOFLAB_CACHE_DIR)");
    od->add_option("--base-url", od_base, "b-file URL base (default https://oeis.org)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        std::optional<std::int64_t> k;
        if (gen_kopt->count() > 0) k = gen_k;
        return cmd_gen(gen_name, k, gen_from, gen_to, gen_format, gen_out);
    }
    if (ver->parsed()) {
        cfg.selected = checks;
        cfg.exec = serial ? verify::Exec::Serial : verify::Exec::Parallel;
        if (fault_opt->count() > 0) cfg.fault_index = fault;
        return cmd_verify(cfg, ver_format, ver_out);
    }
    if (sc->parsed()) return cmd_scatter(sc_to, sc_out);
    if (od->parsed()) {
        std::optional<std::int64_t> k;
        if (od->count("--k") > 0) k = od_k;
        if (od_fixtures.empty()) {
            if (const char* env = std::getenv("HOFLAB_FIXTURE_DIR"); env && *env)
                od_fixtures = env;
            else
                od_fixtures = "fixtures";
        }
        return cmd_oeis_diff(od_seq, k, od_id, od_limit, od_shift, od_online, od_fixtures,
                             od_cache, od_base);
    }
    return 2;
}
