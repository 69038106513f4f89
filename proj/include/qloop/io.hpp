#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qloop/loop.hpp"
#include "qloop/variety.hpp"

namespace qloop {

// Loop file format:
//   lines whose first non-blank character is '#' are ignored;
//   "order N" with 1 <= N <= 64;
//   optional "base B" with B in {0, 1} (default 0);
//   N rows of N whitespace-separated entries in [B, B+N-1].
// Blank lines are skipped. Syntax problems raise ParseError naming the
// 1-based line; table problems raise the validation errors of from_rows.
struct LoadedLoop {
  LoopTable loop;
  int base = 0;
};

LoadedLoop parse_loop(std::string_view text, std::string name = {});
LoadedLoop load_loop(const std::filesystem::path& path);

// Canonical text: "order N", "base B", then one row per line with single
// spaces. parse_loop(format_loop(q, b)) round-trips byte-identically.
std::string format_loop(const LoopTable& q, int base = 0);
void save_loop(const std::filesystem::path& path, const LoopTable& q, int base = 0);

// Machine-readable profile: booleans plus sets as arrays shifted by `base`.
std::string profile_json(const PropertyProfile& p, int base = 0);

// Whole-file read; throws ParseError if the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace qloop
