#pragma once

// Command-line frontend. The whole CLI lives behind run() so tests can
// drive it with captured streams; main() is a one-liner.
//
// Exit code contract: 0 = success (all checks hold), 1 = an identity or
// structure violation was found, 2 = usage or input error.

#include "rithmo/exact.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rithmo::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: args without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BFileEntry {
    std::int64_t index;
    ExactInt value;
};

/// Parses OEIS b-file lines ("index value"); blank lines and '#' comments
/// are skipped. Throws std::invalid_argument on malformed lines.
std::vector<BFileEntry> parse_bfile(std::istream& in);

struct OeisMatch {
    std::int64_t n = 0;
    std::int64_t offset = 0;     // file's k-th value is compared to a(offset + k, n)
    std::size_t match_length = 0;  // longest matching prefix of the file
    std::size_t file_terms = 0;
};

/// Compares file values against the generator-n sequence. With no offset
/// given, offsets in [-10, 10] are scanned and the best match returned
/// (ties favor the smallest offset).
OeisMatch oeis_match(const std::vector<BFileEntry>& entries, std::int64_t n,
                     std::optional<std::int64_t> offset);

}  // namespace rithmo::cli
