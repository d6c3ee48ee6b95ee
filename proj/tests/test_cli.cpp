#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const std::string kCli = HOFLAB_CLI_PATH;
const std::string kFixtures = HOFLAB_FIXTURES_DIR;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stderr_to = "/dev/null") {
    const std::string cmd = kCli + " " + args + " 2>" + stderr_to;
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("hoflab-cli-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("gen reproduces the printed tables byte-exactly") {
    CHECK(run("gen G --from 0 --to 18").out ==
          "0\n1\n1\n2\n3\n3\n4\n4\n5\n6\n6\n7\n8\n8\n9\n9\n10\n11\n11\n");
    CHECK(run("gen L --from 1 --to 18").out ==
          "1\n3\n4\n6\n8\n9\n11\n12\n14\n16\n17\n19\n21\n22\n24\n25\n27\n29\n");
    CHECK(run("gen U --from 1 --to 18").out ==
          "2\n5\n7\n10\n13\n15\n18\n20\n23\n26\n28\n31\n34\n36\n39\n41\n44\n47\n");
    CHECK(run("gen W --from 0 --to 18").out ==
          "0\n2\n1\n5\n7\n3\n10\n4\n13\n15\n6\n18\n20\n8\n23\n9\n26\n28\n11\n");
    CHECK(run("gen Wavg --from 0 --to 18").out == run("gen G --from 0 --to 18").out);
    CHECK(run("gen Hk --k 2 --from 0 --to 25").out ==
          "0\n0\n1\n1\n2\n2\n2\n3\n3\n4\n4\n4\n5\n5\n6\n6\n7\n7\n7\n8\n8\n9\n9\n9\n10\n10\n");
}

TEST_CASE("gen csv format and file output") {
    const auto csv = run("gen W --from 0 --to 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "n,value\n0,0\n1,2\n2,1\n3,5\n");

    TempDir tmp;
    const auto to_file =
        run("gen G --from 0 --to 5 --out " + (tmp.path / "g.txt").string());
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(tmp.path / "g.txt") == "0\n1\n1\n2\n3\n3\n");
}

TEST_CASE("gen usage errors exit 2") {
    CHECK(run("gen nosuch --from 0 --to 5").exit_code == 2);
    CHECK(run("gen G --from 5 --to 1").exit_code == 2);
    CHECK(run("gen L --from 0 --to 5").exit_code == 2);   // L starts at 1
    CHECK(run("gen Hk --from 0 --to 5").exit_code == 2);  // missing --k
    CHECK(run("gen G --k 3 --from 0 --to 5").exit_code == 2);
    CHECK(run("gen").exit_code == 2);
    CHECK(run("bogus-subcommand").exit_code == 2);
}

TEST_CASE("verify: smoke run passes and is deterministic") {
    const auto a = run("verify --to 300 --fib-k 10");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("avg_theorem") != std::string::npos);
    CHECK(a.out.find("failed=0") != std::string::npos);
    const auto b = run("verify --to 300 --fib-k 10");
    CHECK(a.out == b.out);  // byte-identical across runs
    const auto serial = run("verify --to 300 --fib-k 10 --serial");
    CHECK(serial.exit_code == 0);
    CHECK(serial.out == a.out);  // kernels agree
}

TEST_CASE("verify: selected check against paper tables") {
    const auto res = run("verify --check avg_theorem --to 18");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("avg_theorem") != std::string::npos);
    CHECK(res.out.find("passed=19") != std::string::npos);
}

TEST_CASE("verify: unknown check exits 2") {
    CHECK(run("verify --check nonexistent").exit_code == 2);
}

TEST_CASE("verify: injected fault exits 1 with the counterexample") {
    const auto res = run("verify --check g_equiv --to 100 --inject-fault 42");
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("failed=1") != std::string::npos);
    CHECK(res.out.find("n=42") != std::string::npos);
}

TEST_CASE("verify: json format carries the structured fields") {
    const auto res = run("verify --check fib_lemma --fib-k 12 --format json");
    CHECK(res.exit_code == 0);
    const auto arr = nlohmann::json::parse(res.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    CHECK(arr[0]["name"] == "fib_lemma");
    CHECK(arr[0]["lo"] == 1);
    CHECK(arr[0]["hi"] == 12);
    CHECK(arr[0]["passed"] == 12);
    CHECK(arr[0]["failed"] == 0);
    CHECK(arr[0]["counterexample"].is_null());
    CHECK(arr[0].contains("elapsed_ms"));
}

TEST_CASE("scatter: header, row content, and --to 0") {
    const auto empty = run("scatter --to 0");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out == "n,W,lower_line,upper_line\n");

    TempDir tmp;
    const auto res = run("scatter --to 68 --out " + (tmp.path / "w.csv").string());
    CHECK(res.exit_code == 0);
    const std::string csv = slurp(tmp.path / "w.csv");
    // 68 data rows plus header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 69);
    CHECK(csv.rfind("n,W,lower_line,upper_line\n", 0) == 0);
    // row n=4: W=7 and the upper line floor(4*phi)+1 = 7 (4 = L(3))
    CHECK(csv.find("\n4,7,2,7\n") != std::string::npos);
    // row n=2: W(2)=1 = floor(2*gamma) lower line (2 = U(1))
    CHECK(csv.find("\n2,1,1,4\n") != std::string::npos);
}

TEST_CASE("oeis-diff: clean fixtures, corrupted fixture, missing fixture") {
    const std::string fx = " --fixtures " + kFixtures;
    const auto ok = run("oeis-diff --seq W --limit 1000" + fx);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("oeis_A002251_W") != std::string::npos);
    CHECK(ok.out.find("failed=0") != std::string::npos);

    // explicit id spelling
    CHECK(run("oeis-diff --seq G --id A005206 --limit 19" + fx).exit_code == 0);

    // corrupted fixture: failed >= 1, correct first counterexample, exit 1
    TempDir tmp;
    std::string body = slurp(fs::path(kFixtures) / "b002251.txt");
    const auto pos = body.find("\n7 4\n");  // the index-7 line
    REQUIRE(pos != std::string::npos);
    body.replace(pos, 5, "\n7 5\n");
    std::ofstream(tmp.path / "b002251.txt", std::ios::binary) << body;
    const auto bad = run("oeis-diff --seq W --limit 100 --fixtures " + tmp.path.string());
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("failed=1") != std::string::npos);
    CHECK(bad.out.find("n=7") != std::string::npos);

    // missing fixture in offline mode: exit 1 with explicit message
    TempDir empty_dir;
    const auto missing = run("oeis-diff --seq W --fixtures " + empty_dir.path.string() +
                                 " --cache " + empty_dir.path.string(),
                             (empty_dir.path / "err.txt").string());
    CHECK(missing.exit_code == 1);
    CHECK(slurp(empty_dir.path / "err.txt").find("fixture missing") != std::string::npos);

    // unknown sequence exits 2
    CHECK(run("oeis-diff --seq nosuch" + fx).exit_code == 2);
    // z has no catalogued A-number
    CHECK(run("oeis-diff --seq z" + fx).exit_code == 2);
}

TEST_CASE("oeis-diff: every catalogued fixture diffs clean") {
    const std::string fx = " --fixtures " + kFixtures;
    for (const char* name : {"G", "Grec", "L", "U", "W", "Wavg", "f", "a", "b", "Hpell",
                             "R", "Lpell", "Upell", "Wpell", "cloitre", "V"}) {
        const auto res = run(std::string("oeis-diff --limit 1000 --seq ") + name + fx);
        INFO(name);
        CHECK(res.exit_code == 0);
    }
}
