#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mixtau/ideal.hpp"

namespace mixtau {

/// Budgets for Buchberger's algorithm. Exceeding either raises
/// ResourceLimitError; results are never silently truncated.
struct GroebnerLimits {
  std::uint64_t max_pairs = 1'000'000;
  std::uint64_t max_degree = 1'000'000;
};

/// The reduced Groebner basis of an ideal w.r.t. its ring's monomial order:
/// monic, auto-reduced, sorted by leading monomial: increasing degree, and
/// decreasing grevlex within a degree (so (x, y) lists x first). The unit ideal
/// has basis [1]; the zero ideal has an empty basis.
class ReducedGB {
 public:
  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_; }

  bool is_unit() const noexcept { return basis_.size() == 1 && basis_[0].is_unit(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  IdealGens as_ideal() const { return IdealGens(ring_, basis_); }

 private:
  friend ReducedGB buchberger(const IdealGens&, const GroebnerLimits&);
  ReducedGB(RingPtr ring, std::vector<Polynomial> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

  RingPtr ring_;
  std::vector<Polynomial> basis_;
};

/// Deterministic: pairs are processed by smallest lcm (normal strategy),
/// ties broken by generator indices. Uses Buchberger's coprime and chain
/// criteria.
ReducedGB buchberger(const IdealGens& ideal, const GroebnerLimits& limits = {});

/// Remainder of full multivariate division of f by `divisors` (first
/// divisor whose leading monomial divides wins).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);
inline Polynomial normal_form(const Polynomial& f, const ReducedGB& gb) { return normal_form(f, gb.basis()); }

bool ideal_member(const Polynomial& f, const ReducedGB& gb);
/// I contains J.
bool ideal_contains(const ReducedGB& I, const IdealGens& J);
bool ideal_contains(const IdealGens& I, const IdealGens& J);
bool ideal_equal(const IdealGens& I, const IdealGens& J);

/// Canonical identity of an ideal: the reduced basis printed compactly in
/// grevlex term order and joined with ';', e.g. "x+y;y^2". The unit ideal
/// is "1" and the zero ideal "0".
struct IdealKey {
  std::string key;

  friend bool operator==(const IdealKey&, const IdealKey&) = default;
  friend auto operator<=>(const IdealKey&, const IdealKey&) = default;
};

IdealKey ideal_key(const ReducedGB& gb);
IdealKey ideal_key(const IdealGens& ideal);

/// f / g when g divides f; throws InvariantError otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// I intersected with J by eliminating an auxiliary variable t from
/// t*I + (1 - t)*J.
IdealGens ideal_intersection(const IdealGens& I, const IdealGens& J, const GroebnerLimits& limits = {});

/// (I : J) = intersection over generators f of J of (I : f), where
/// (I : f) = (I intersected with (f)) / f. J must be nonzero. The result is
/// returned as its reduced Groebner basis.
IdealGens ideal_colon(const IdealGens& I, const IdealGens& J, const GroebnerLimits& limits = {});

}  // namespace mixtau
