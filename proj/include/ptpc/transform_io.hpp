#pragma once

// Text formats for rate-profiles and pre-transform matrices.
//
// Profile file:
//     # comment
//     n=4
//     10
//     11
//     14
//     15
//
// Transform file (only nonzero rows are listed):
//     n=3
//     0: 0 2 3
//     1: 1 3
//
// '#' starts a comment anywhere on a line; blank lines are ignored.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ptpc/code_model.hpp"

namespace ptpc {

/// Malformed input file. The message names the line and offending field.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CodeSpec parse_profile(std::istream& in);
CodeSpec load_profile(const std::filesystem::path& path);
void write_profile(std::ostream& out, const CodeSpec& spec);

PreTransform parse_transform(std::istream& in);
PreTransform load_transform(const std::filesystem::path& path);
void write_transform(std::ostream& out, const PreTransform& t);

}  // namespace ptpc
