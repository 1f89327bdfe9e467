#include "mixtau/lucas.hpp"

#include <algorithm>

#include "mixtau/error.hpp"

namespace mixtau {
namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// binom(a, b) mod p for 0 <= b <= a < p.
std::uint64_t small_binomial(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  b = std::min(b, a - b);
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = mulmod(num, a - i, p);
    den = mulmod(den, i + 1, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace

std::vector<std::uint64_t> base_p_digits(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw PreconditionError("base must be at least 2");
  std::vector<std::uint64_t> digits;
  while (n) {
    digits.push_back(n % p);
    n /= p;
  }
  return digits;
}

FpScalar lucas_binomial(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("lucas_binomial needs a prime modulus");
  if (n > m) return {0};
  std::uint64_t result = 1;
  while (n) {
    std::uint64_t mj = m % p, nj = n % p;
    if (nj > mj) return {0};
    result = mulmod(result, small_binomial(mj, nj, p), p);
    m /= p;
    n /= p;
  }
  return {result % p};
}

}  // namespace mixtau
