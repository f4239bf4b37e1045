#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "polignac/gap_census.hpp"

namespace polignac {

// Text layout:
//   POLIGNAC-CENSUS v1
//   x=<decimal>
//   primes=<decimal>
//   <gap>,<count>        one line per gap, ascending
// LF line endings, single trailing LF.
std::string serialize_census(const GapCensus& census);

// Strict inverse of serialize_census; also rejects censuses that break the
// conservation or parity invariants. Throws FormatError.
GapCensus parse_census(std::string_view text);

void write_census_file(const std::filesystem::path& path, const GapCensus& census);
GapCensus read_census_file(const std::filesystem::path& path);

}  // namespace polignac
