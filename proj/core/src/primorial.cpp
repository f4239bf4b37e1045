#include "polignac/primorial.hpp"

#include "polignac/errors.hpp"
#include "polignac/sieve.hpp"

namespace polignac {

BigInt primorial(std::uint64_t k) {
    if (k > 0xFFFFFFFFULL) throw PreconditionError("primorial: k must fit in 32 bits");
    BigInt d = 1;
    for (std::uint32_t p : small_primes_up_to(static_cast<std::uint32_t>(k))) d *= p;
    return d;
}

}  // namespace polignac
