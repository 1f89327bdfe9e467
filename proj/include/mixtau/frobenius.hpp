#pragma once

#include <cstdint>

#include "mixtau/ideal.hpp"

namespace mixtau {

/// A Frobenius level e together with q = p^e. Construction fails with
/// OverflowError when q does not fit in 64 bits.
class FrobLevel {
 public:
  FrobLevel(std::uint64_t p, unsigned e);
  FrobLevel(const Ring& ring, unsigned e) : FrobLevel(ring.characteristic(), e) {}

  std::uint64_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  std::uint64_t q() const noexcept { return q_; }

 private:
  std::uint64_t p_;
  unsigned e_;
  std::uint64_t q_;
};

/// I^[q] = (g^q : g a generator of I).
IdealGens bracket_power(const IdealGens& ideal, const FrobLevel& level);

/// h^[1/q]: group the terms of h by exponent residue mod q; each class
/// alpha contributes the polynomial sum_beta c_beta x^((beta - alpha)/q).
/// Coefficients are untouched since p-th roots are trivial in F_p.
IdealGens poly_bracket_root(const Polynomial& h, const FrobLevel& level);

/// b^[1/q] as the union of the generators' roots. Raw components, not
/// canonicalized.
IdealGens ideal_bracket_root(const IdealGens& b, const FrobLevel& level);

enum class RootStrategy {
  /// Split m = l + q*h with l < q, use (f^l * (f^h)^q)^[1/q] = f^h * (f^l)^[1/q],
  /// and expand f^l through base-p digits.
  split,
  /// Expand f^m fully, then take the root. For differential testing.
  naive,
};

/// (f^m)^[1/q].
IdealGens root_of_power(const Polynomial& f, std::uint64_t m, const FrobLevel& level,
                        RootStrategy strategy = RootStrategy::split);

}  // namespace mixtau
