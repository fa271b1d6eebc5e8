#include "ptpc/transform_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "ptpc/bitops.hpp"

namespace ptpc {
namespace {

std::string_view strip(std::string_view s) {
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw FormatError("line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_number(std::string_view tok, std::size_t line, const char* field) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail(line, std::string("invalid ") + field + " '" + std::string(tok) + "'");
    return value;
}

int parse_header(std::string_view s, std::size_t line) {
    if (s.substr(0, 2) != "n=") fail(line, "expected header 'n=<int>'");
    const auto n = parse_number(strip(s.substr(2)), line, "n");
    if (n < 1 || n > static_cast<std::uint64_t>(kMaxLog2Length))
        fail(line, "n=" + std::to_string(n) + " out of range");
    return static_cast<int>(n);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    return in;
}

}  // namespace

CodeSpec parse_profile(std::istream& in) {
    std::optional<int> n;
    std::vector<std::uint32_t> info;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto s = strip(raw);
        if (s.empty()) continue;
        if (!n) {
            n = parse_header(s, line);
            continue;
        }
        const auto idx = parse_number(s, line, "index");
        if (idx >= (std::uint64_t{1} << *n))
            fail(line, "index " + std::to_string(idx) + " out of range for n=" + std::to_string(*n));
        if (!info.empty() && idx <= info.back()) fail(line, "indices must be strictly increasing");
        info.push_back(static_cast<std::uint32_t>(idx));
    }
    if (!n) throw FormatError("profile: missing header 'n=<int>'");
    if (info.empty()) throw FormatError("profile: no information indices");
    return CodeSpec(*n, std::move(info));
}

CodeSpec load_profile(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return parse_profile(in);
}

void write_profile(std::ostream& out, const CodeSpec& spec) {
    out << "n=" << spec.n() << '\n';
    for (auto i : spec.info_set()) out << i << '\n';
}

PreTransform parse_transform(std::istream& in) {
    std::optional<PreTransform> t;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto s = strip(raw);
        if (s.empty()) continue;
        if (!t) {
            t.emplace(parse_header(s, line));
            continue;
        }
        const auto colon = s.find(':');
        if (colon == std::string_view::npos) fail(line, "expected '<row>: <col> ...'");
        const auto row = parse_number(strip(s.substr(0, colon)), line, "row index");
        if (row >= t->length()) fail(line, "row index " + std::to_string(row) + " out of range");
        auto rest = s.substr(colon + 1);
        while (true) {
            rest = strip(rest);
            if (rest.empty()) break;
            const auto sp = rest.find_first_of(" \t");
            const auto tok = rest.substr(0, sp);
            const auto col = parse_number(tok, line, "column index");
            if (col >= t->length()) fail(line, "column index " + std::to_string(col) + " out of range");
            if (col < row) fail(line, "entry (" + std::to_string(row) + "," + std::to_string(col) +
                                          ") below the diagonal");
            t->set_entry(row, col, true);
            if (sp == std::string_view::npos) break;
            rest = rest.substr(sp);
        }
    }
    if (!t) throw FormatError("transform: missing header 'n=<int>'");
    return std::move(*t);
}

PreTransform load_transform(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return parse_transform(in);
}

void write_transform(std::ostream& out, const PreTransform& t) {
    out << "n=" << t.n() << '\n';
    for (std::size_t h = 0; h < t.length(); ++h) {
        const auto& row = t.row(h);
        if (row.empty()) continue;
        out << h << ':';
        for (auto col : row.support()) out << ' ' << col;
        out << '\n';
    }
}

}  // namespace ptpc
