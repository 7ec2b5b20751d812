#pragma once

#include <vector>

#include "qlucas/integer.hpp"

namespace qlucas {

// All primes <= limit, ascending. Segmented; memory is O(sqrt(limit) + segment).
std::vector<u64> primes_up_to(u64 limit);

// Primes p <= limit with p == 1 (mod 4).
std::vector<u64> primes_one_mod_four(u64 limit);

} // namespace qlucas
