#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "dalescope/grid.hpp"

namespace dalescope {

enum class PgmFormat { P5, P2 };

/// Reads P5 (binary) or P2 (ASCII) PGM. levels = maxval + 1, maxval <= 255.
Grid read_pgm(const std::filesystem::path& path);
Grid read_pgm(std::istream& in, const std::string& origin = "<stream>");

/// Writes with maxval = levels - 1. Round-trips bit-exactly.
void write_pgm(const std::filesystem::path& path, const Grid& g, PgmFormat format = PgmFormat::P5);
void write_pgm(std::ostream& out, const Grid& g, PgmFormat format = PgmFormat::P5);

} // namespace dalescope
