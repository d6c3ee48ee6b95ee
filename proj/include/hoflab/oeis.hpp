#pragma once

// OEIS b-file ingestion and diffing.
//
// b-file format: optional '#' comment lines, otherwise "index value" pairs,
// indices contiguous ascending. Files come from the fixture directory, from
// the cache, or (online mode, opt-in) over HTTP from the standard OEIS URL
// pattern, in that order; a fetched file is written to the cache byte-exact.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hoflab/bigint.hpp"
#include "hoflab/verify.hpp"

namespace hoflab::oeis {

struct BFileEntry {
    std::int64_t index;
    BigInt value;
};

struct BFile {
    std::string id;  // normalized "A######"
    std::vector<BFileEntry> entries;

    std::int64_t first_index() const { return entries.front().index; }
    std::int64_t last_index() const { return entries.back().index; }
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("b-file line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class FetchError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "a2251" -> "A002251"; throws std::invalid_argument on malformed ids.
std::string normalize_id(std::string_view id);
std::string bfile_name(const std::string& normalized_id);  // "b002251.txt"

BFile parse_bfile(std::string_view text, std::string id = "");
std::string serialize_bfile(const BFile& bfile);

enum class FetchMode { Offline, Online };

struct FetchOptions {
    FetchMode mode = FetchMode::Offline;
    std::filesystem::path fixture_dir;  // searched first when set
    std::filesystem::path cache_dir;    // empty -> default_cache_dir()
    std::string base_url = "https://oeis.org";
};

// HOFLAB_CACHE_DIR, else XDG_CACHE_HOME/hoflab, else ~/.cache/hoflab.
std::filesystem::path default_cache_dir();

BFile fetch_bfile(const std::string& id, const FetchOptions& opts);

struct OffsetMap {
    std::int64_t shift = 0;  // computed index n maps to b-file index n+shift
};

// Compare value_at(n) (defined for n >= seq_first) against the b-file over
// the shifted overlap, at most `limit` entries. Throws std::invalid_argument
// when the overlap is empty; *truncated reports limit > available overlap.
verify::CheckReport diff(const std::function<BigInt(std::int64_t)>& value_at,
                         std::int64_t seq_first, std::string check_name, const BFile& bfile,
                         OffsetMap map, std::int64_t limit, bool* truncated = nullptr);

}  // namespace hoflab::oeis
