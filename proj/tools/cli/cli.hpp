#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/render.hpp"

namespace polignac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // reported outcome, e.g. no narrow tuple
inline constexpr int kExitUsage = 2;    // bad flags or violated preconditions

// Parsed and validated invocation. Numeric fields hold only what the chosen
// subcommand uses; big values (q, a, N, tuple text) stay as strings until
// dispatch parses them exactly.
struct RunConfig {
    std::string subcommand;
    std::optional<std::uint64_t> x, k, t, m_max, max_diameter, block_count, i_max, lo, hi, n_bound;
    std::optional<std::string> n, q, a, c, tuple, census_path, set_path;
    bool analytic = false;
    bool empirical = false;
    bool keep_gap_one = false;
    bool count_only = false;
    unsigned workers = 1;
    std::uint64_t segment_size = 0;
    std::optional<std::string> output_path;
    Format format = Format::Table;
};

// Parses args (without the program name), runs exactly one subcommand and
// writes the rendered result. Returns one of the kExit* codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polignac::cli
