#include "hoflab/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <httplib.h>

namespace hoflab::oeis {

namespace fs = std::filesystem;

std::string normalize_id(std::string_view id) {
    std::string digits;
    std::size_t i = 0;
    if (i < id.size() && (id[i] == 'A' || id[i] == 'a')) ++i;
    for (; i < id.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(id[i])))
            throw std::invalid_argument("bad OEIS id: " + std::string(id));
        digits.push_back(id[i]);
    }
    if (digits.empty() || digits.size() > 7)
        throw std::invalid_argument("bad OEIS id: " + std::string(id));
    while (digits.size() < 6) digits.insert(digits.begin(), '0');
    return "A" + digits;
}

std::string bfile_name(const std::string& normalized_id) {
    return "b" + normalized_id.substr(1) + ".txt";
}

BFile parse_bfile(std::string_view text, std::string id) {
    BFile out;
    out.id = std::move(id);
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        // skip blanks and comments
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream ls{std::string(line)};
        std::string tok_index, tok_value, extra;
        ls >> tok_index >> tok_value;
        if (tok_value.empty()) throw ParseError("expected \"index value\"", lineno);
        if (ls >> extra) throw ParseError("trailing token \"" + extra + "\"", lineno);
        std::int64_t index;
        BigInt value;
        try {
            index = BigInt(tok_index).to_i64();
            value = BigInt(tok_value);
        } catch (const std::exception&) {
            throw ParseError("malformed integer in \"" + std::string(line) + "\"", lineno);
        }
        if (!out.entries.empty() && index != out.entries.back().index + 1)
            throw ParseError("gap at index " + std::to_string(out.entries.back().index + 1),
                             lineno);
        out.entries.push_back({index, std::move(value)});
    }
    if (out.entries.empty()) throw ParseError("no entries", lineno);
    return out;
}

std::string serialize_bfile(const BFile& bfile) {
    std::string out;
    for (const auto& e : bfile.entries) {
        out += std::to_string(e.index);
        out += ' ';
        out += e.value.str();
        out += '\n';
    }
    return out;
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("HOFLAB_CACHE_DIR"); env && *env) return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "hoflab";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "hoflab";
    return fs::path(".hoflab-cache");
}

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_cache(const fs::path& dir, const std::string& name, const std::string& body) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    const fs::path tmp = dir / (name + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary);
        out << body;
    }
    fs::rename(tmp, dir / name, ec);
    if (ec) fs::remove(tmp, ec);
}

}  // namespace

BFile fetch_bfile(const std::string& id, const FetchOptions& opts) {
    const std::string norm = normalize_id(id);
    const std::string name = bfile_name(norm);
    const fs::path cache_dir = opts.cache_dir.empty() ? default_cache_dir() : opts.cache_dir;

    if (!opts.fixture_dir.empty()) {
        const fs::path p = opts.fixture_dir / name;
        if (fs::exists(p)) return parse_bfile(read_file(p), norm);
    }
    if (const fs::path p = cache_dir / name; fs::exists(p))
        return parse_bfile(read_file(p), norm);

    if (opts.mode == FetchMode::Offline) {
        std::string looked = opts.fixture_dir.empty() ? "" : opts.fixture_dir.string() + ", ";
        throw FetchError("fixture missing for " + norm + " (offline mode; looked in " + looked +
                         cache_dir.string() + ")");
    }

    httplib::Client client(opts.base_url);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    const std::string path = "/" + norm + "/" + name;
    auto res = client.Get(path);
    if (!res || res->status != 200) {
        std::string why = res ? "HTTP " + std::to_string(res->status)
                              : "transport error (" + httplib::to_string(res.error()) + ")";
        throw FetchError("fetch of " + opts.base_url + path + " failed: " + why +
                         ", and no cached copy exists");
    }
    write_cache(cache_dir, name, res->body);
    return parse_bfile(res->body, norm);
}

verify::CheckReport diff(const std::function<BigInt(std::int64_t)>& value_at,
                         std::int64_t seq_first, std::string check_name, const BFile& bfile,
                         OffsetMap map, std::int64_t limit, bool* truncated) {
    if (bfile.entries.empty()) throw std::invalid_argument("diff: empty b-file");
    const std::int64_t lo = std::max(seq_first, bfile.first_index() - map.shift);
    const std::int64_t hi_avail = bfile.last_index() - map.shift;
    if (hi_avail < lo) throw std::invalid_argument("diff: empty overlap between sequence and b-file");
    if (limit < 1) throw std::invalid_argument("diff: limit must be >= 1");
    const std::int64_t hi = std::min(hi_avail, lo + limit - 1);
    if (truncated) *truncated = hi_avail - lo + 1 < limit;

    const auto* entries = &bfile.entries;
    const std::int64_t base = bfile.first_index();
    const std::int64_t shift = map.shift;
    // OEIS values are ground truth here, so they are "expected".
    return verify::scan_range(
        std::move(check_name), lo, hi, verify::Exec::Serial,
        [entries, base, shift, &value_at](std::int64_t n, std::string& e, std::string& a) {
            const BigInt& want = (*entries)[static_cast<std::size_t>(n + shift - base)].value;
            const BigInt got = value_at(n);
            if (got == want) return true;
            e = want.str();
            a = got.str();
            return false;
        });
}

}  // namespace hoflab::oeis
