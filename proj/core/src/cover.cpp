#include "polignac/gap_census.hpp"

#include <algorithm>

#include "polignac/errors.hpp"

namespace polignac {

// The answer is the length of the longest candidate-free run of integers in
// [0, m_max]: a run of L free points fits a window of width L - 1 and no
// window of width L.
std::optional<CoverReport> interval_cover_constant(std::span<const std::uint64_t> positions,
                                                   std::uint64_t m_max) {
    if (!std::is_sorted(positions.begin(), positions.end())) {
        throw PreconditionError("candidate positions must be ascending");
    }
    auto end = std::upper_bound(positions.begin(), positions.end(), m_max);
    if (end == positions.begin()) return std::nullopt;

    CoverReport r;
    r.m_max = m_max;
    auto consider = [&](std::uint64_t run_start, std::uint64_t run_len) {
        if (run_len == 0) return;
        if (run_len >= r.c_emp) {
            r.c_emp = run_len;
            r.worst_m = run_start;
        }
    };

    consider(0, positions.front());
    for (auto it = positions.begin() + 1; it != end; ++it) {
        if (*it > *(it - 1)) consider(*(it - 1) + 1, *it - *(it - 1) - 1);
    }
    consider(*(end - 1) + 1, m_max - *(end - 1));
    return r;
}

bool verify_cover(const CoverReport& report, std::span<const std::uint64_t> positions) {
    const std::uint64_t m_max = report.m_max;
    const std::uint64_t c = report.c_emp;
    if (c > m_max) return false;

    // prefix[i] = candidates in [0, i)
    std::vector<std::uint64_t> prefix(m_max + 2, 0);
    std::vector<std::uint8_t> hit(m_max + 1, 0);
    for (auto v : positions) {
        if (v <= m_max) hit[v] = 1;
    }
    for (std::uint64_t i = 0; i <= m_max; ++i) prefix[i + 1] = prefix[i] + hit[i];
    auto count = [&](std::uint64_t a, std::uint64_t b) { return prefix[b + 1] - prefix[a]; };

    for (std::uint64_t m = 0; m + c <= m_max; ++m) {
        if (count(m, m + c) == 0) return false;
    }
    if (c == 0) return !report.worst_m.has_value();
    if (!report.worst_m) return false;
    const auto w = *report.worst_m;
    return w + c - 1 <= m_max && count(w, w + c - 1) == 0;
}

}  // namespace polignac
