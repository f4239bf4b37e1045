#include "polignac/census_io.hpp"

#include <fstream>
#include <sstream>

#include "polignac/bigint.hpp"
#include "polignac/errors.hpp"

namespace polignac {

namespace {

constexpr std::string_view kMagic = "POLIGNAC-CENSUS v1";

std::uint64_t field(std::string_view line, std::string_view key, std::size_t lineno) {
    if (line.substr(0, key.size()) != key) {
        throw FormatError("census line " + std::to_string(lineno) + ": expected '" +
                          std::string(key) + "'");
    }
    try {
        return parse_u64(line.substr(key.size()));
    } catch (const FormatError& e) {
        throw FormatError("census line " + std::to_string(lineno) + ": " + e.what());
    }
}

}  // namespace

std::string serialize_census(const GapCensus& census) {
    std::string out;
    out += kMagic;
    out += "\nx=" + std::to_string(census.x);
    out += "\nprimes=" + std::to_string(census.prime_count);
    out += '\n';
    for (const auto& [gap, count] : census.counts) {
        out += std::to_string(gap) + ',' + std::to_string(count) + '\n';
    }
    return out;
}

GapCensus parse_census(std::string_view text) {
    if (text.empty() || text.back() != '\n') throw FormatError("census must end with a single LF");
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    if (lines.size() < 3) throw FormatError("census header is incomplete");
    if (lines[0] != kMagic) throw FormatError("census line 1: bad magic");

    GapCensus c;
    c.x = field(lines[1], "x=", 2);
    c.prime_count = field(lines[2], "primes=", 3);

    std::uint64_t prev = 0;
    for (std::size_t i = 3; i < lines.size(); ++i) {
        const auto line = lines[i];
        const auto lineno = std::to_string(i + 1);
        auto comma = line.find(',');
        if (comma == std::string_view::npos) throw FormatError("census line " + lineno + ": missing ','");
        std::uint64_t gap = 0;
        std::uint64_t count = 0;
        try {
            gap = parse_u64(line.substr(0, comma));
            count = parse_u64(line.substr(comma + 1));
        } catch (const FormatError& e) {
            throw FormatError("census line " + lineno + ": " + e.what());
        }
        if (gap == 0 || (gap > 1 && gap % 2 != 0)) {
            throw FormatError("census line " + lineno + ": gap must be 1 or even");
        }
        if (gap <= prev) throw FormatError("census line " + lineno + ": gaps must be ascending");
        if (count == 0) throw FormatError("census line " + lineno + ": zero count");
        c.counts.emplace(gap, count);
        prev = gap;
    }
    const auto expected = c.prime_count == 0 ? 0 : c.prime_count - 1;
    if (c.total_gaps() != expected) {
        throw FormatError("census counts do not sum to primes - 1");
    }
    return c;
}

void write_census_file(const std::filesystem::path& path, const GapCensus& census) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    f << serialize_census(census);
    if (!f) throw std::runtime_error("write failed for '" + path.string() + "'");
}

GapCensus read_census_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_census(ss.str());
}

}  // namespace polignac
