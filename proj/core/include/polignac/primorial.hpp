#pragma once

#include <cstdint>

#include "polignac/bigint.hpp"

namespace polignac {

// Product of all primes p <= k; 1 for k < 2.
BigInt primorial(std::uint64_t k);

}  // namespace polignac
