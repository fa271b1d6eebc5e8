#pragma once

// Machine-readable record of one CLI run.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptpc/bitvector.hpp"
#include "ptpc/enumerator.hpp"

namespace ptpc {

struct RunReport {
    std::string tool_version = PTPC_VERSION;
    /// Arguments as given, command name first.
    std::vector<std::string> command;

    int n = 0;
    std::uint64_t dimension = 0;
    double rate = 0.0;
    /// "rm(r,n)" or "file:<path>".
    std::string profile_origin;

    /// identity | pac | random | file | none
    std::string transform_kind = "none";
    /// Octal polynomial, seed or path; empty for identity.
    std::string transform_value;

    std::uint64_t wmin = 0;
    std::optional<BigCount> awmin;
    bool dmin_exceeds_wmin = false;
    std::vector<std::pair<std::uint32_t, BigCount>> per_coset;
    std::optional<EnumerationStats> stats;
    double wall_seconds = 0.0;

    /// Command-specific results in output order, values in full decimal.
    std::vector<std::pair<std::string, std::string>> results;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Integers above 2^53 are written as decimal strings; Awmin always is.
std::string to_json(const RunReport& report, int indent = 2);

/// Inverse of to_json. Throws FormatError on malformed input.
RunReport run_report_from_json(std::string_view text);

}  // namespace ptpc
