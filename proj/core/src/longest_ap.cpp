#include "polignac/progressions.hpp"

#include <algorithm>
#include <limits>

#include "polignac/errors.hpp"

namespace polignac {

// Every pair (i, j) fixes an AP through s[i], s[j]. Pairs whose predecessor
// s[i] - step is also in s are interior and skipped; from each remaining
// pair the run is walked forward. Each consecutive pair of a maximal run is
// walked once, so the scan touches O(n^2) pairs with O(1) extra memory.
APRun longest_ap_in_set(std::span<const std::int64_t> s) {
    if (s.empty()) throw PreconditionError("longest_ap_in_set requires a non-empty set");
    if (s.size() > kMaxApInput) {
        throw PreconditionError("longest_ap_in_set accepts at most " + std::to_string(kMaxApInput) +
                                " elements");
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] <= s[i - 1]) throw PreconditionError("set must be strictly ascending");
    }

    if (s.front() < 0 && s.back() > std::numeric_limits<std::int64_t>::max() + s.front()) {
        throw PreconditionError("set span max - min must fit in 64 bits");
    }

    APRun best{s.front(), 1, 1};
    const std::size_t n = s.size();
    for (std::size_t i = 0; i + best.length <= n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::int64_t step = s[j] - s[i];
            // Steps only grow with j, so once the span left above s[i] cannot
            // hold more than best.length terms no later j can either.
            if ((s.back() - s[i]) / step + 1 <= static_cast<std::int64_t>(best.length)) break;

            if (s[i] - s.front() >= step &&
                std::binary_search(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i), s[i] - step)) {
                continue;
            }

            std::uint64_t len = 2;
            std::size_t at = j;
            while (s.back() - s[at] >= step) {
                const std::int64_t want = s[at] + step;
                auto it = std::lower_bound(s.begin() + static_cast<std::ptrdiff_t>(at + 1), s.end(), want);
                if (it == s.end() || *it != want) break;
                at = static_cast<std::size_t>(it - s.begin());
                ++len;
            }
            if (len > best.length) best = APRun{s[i], step, len};
        }
    }
    return best;
}

bool ap_within(const APRun& run, std::span<const std::int64_t> s) {
    if (run.length == 0 || run.step <= 0) return false;
    std::int64_t v = run.start;
    for (std::uint64_t t = 0; t < run.length; ++t) {
        if (!std::binary_search(s.begin(), s.end(), v)) return false;
        v += run.step;
    }
    return true;
}

}  // namespace polignac
