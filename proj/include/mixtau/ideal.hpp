#pragma once

#include <cstdint>
#include <vector>

#include "mixtau/polynomial.hpp"

namespace mixtau {

/// An ideal given by generators. Zero generators are dropped, the rest are
/// made monic and exact duplicates removed (first occurrence wins). No
/// minimization happens here; that is the job of the Groebner layer.
class IdealGens {
 public:
  explicit IdealGens(RingPtr ring) : ring_(std::move(ring)) {}
  IdealGens(RingPtr ring, std::vector<Polynomial> gens);

  static IdealGens zero(RingPtr ring) { return IdealGens(std::move(ring)); }
  static IdealGens unit(RingPtr ring);
  static IdealGens principal(const Polynomial& f);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  /// True when a generator is a nonzero constant (sufficient, not necessary,
  /// for being the unit ideal).
  bool has_unit_generator() const noexcept;
  std::uint64_t max_degree() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Pairwise products of generators, deduplicated.
IdealGens ideal_product(const IdealGens& a, const IdealGens& b);

/// Generators of I^m: one product prod_i g_i^{k_i} per exponent multiset
/// with sum k_i = m, built from a table of generator powers g_i^k. A
/// principal ideal goes straight through poly_pow.
IdealGens ideal_power(const IdealGens& ideal, std::uint64_t m);

}  // namespace mixtau
