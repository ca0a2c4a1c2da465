#ifndef HM_BINOMIAL_HPP
#define HM_BINOMIAL_HPP

#include <cstdint>

#include "hm/rational.hpp"

namespace hm {

/// C(n, k) as an exact big integer. Out-of-range k (k < 0 or k > n) yields 0.
BigInt binomial(long n, long k);

/// C(n, k) for small arguments where the result fits in 64 bits (n <= 63).
std::uint64_t binomial_u64(int n, int k);

}  // namespace hm

#endif  // HM_BINOMIAL_HPP
