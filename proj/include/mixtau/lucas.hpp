#pragma once

#include <cstdint>
#include <vector>

#include "mixtau/ring.hpp"

namespace mixtau {

/// Base-p digits of n, least significant first; empty for n = 0.
std::vector<std::uint64_t> base_p_digits(std::uint64_t n, std::uint64_t p);

/// binom(m, n) mod p via the digit-wise product of small binomials.
/// Returns 0 when n > m. p must be prime.
FpScalar lucas_binomial(std::uint64_t m, std::uint64_t n, std::uint64_t p);

}  // namespace mixtau
