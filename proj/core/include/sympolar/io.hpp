#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sympolar/polytope.hpp"

namespace sympolar {

/// {"dim": d, "vertices": [["p/q", ...], ...]}
std::string polytope_to_json(const Polytope& p);

/// Parses the polytope format and canonicalizes through convex_hull. Only
/// string-encoded rationals are accepted; JSON numbers (floats in
/// particular) raise ParseError.
Polytope polytope_from_json(std::string_view text);

Polytope read_polytope_file(const std::filesystem::path& path);
void write_polytope_file(const std::filesystem::path& path, const Polytope& p);

std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over the target, so
/// readers never observe a partial file.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace sympolar
