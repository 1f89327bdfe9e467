#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixtau/frobenius.hpp"
#include "mixtau/groebner.hpp"
#include "mixtau/rational.hpp"

namespace mixtau {

/// Exponent vector c = (c_1, ..., c_n) with exact non-negative rational entries.
struct ParamPoint {
  std::vector<Rational> coords;

  std::size_t size() const noexcept { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const;
  /// Largest s with some coordinate having denominator exactly p^s, or
  /// nullopt if a denominator is not a power of p.
  std::optional<unsigned> p_adic_level(std::uint64_t p) const;
  std::string to_string() const;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
  friend auto operator<=>(const ParamPoint& a, const ParamPoint& b) { return a.coords <=> b.coords; }
};

/// The tuple of ideals a = (a_1, ..., a_n) whose mixed test ideals are studied.
class IdealFamily {
 public:
  /// Requires n >= 1, a common ring and nonzero ideals.
  explicit IdealFamily(std::vector<IdealGens> ideals);

  const RingPtr& ring() const noexcept { return ideals_.front().ring(); }
  const std::vector<IdealGens>& ideals() const noexcept { return ideals_; }
  const IdealGens& operator[](std::size_t i) const { return ideals_[i]; }
  std::size_t size() const noexcept { return ideals_.size(); }

  /// Number of stored generators m_i of each a_i (the counts Skoda peeling uses).
  std::vector<std::uint64_t> gen_counts() const;
  bool all_principal() const;
  /// Largest generator degree over all a_i.
  std::uint64_t max_degree() const;

 private:
  std::vector<IdealGens> ideals_;
};

/// Stabilization policy for the chain (a^ceil(c p^e))^[1/p^e].
struct TauConfig {
  unsigned e_start = 1;
  unsigned e_max = 8;
  /// Number of consecutive levels with the same ideal key required to accept.
  unsigned confirm_window = 2;
  /// Assert the degree bound floor(d * sum c_i) when every c_i is p-adic.
  bool degree_check = true;
  /// Skoda peeling and the exact principal shortcut. Off forces the plain
  /// stabilization loop, for cross-checking.
  bool fast_paths = true;
  GroebnerLimits limits;

  void validate() const;
};

/// tau(f^lambda) = (f^m)^[1/p^e] for lambda = m / p^e. Exact.
IdealGens tau_principal(const Polynomial& f, const PAdicRational& lambda);

/// The mixed test ideal tau(a_1^c_1 ... a_n^c_n). Peels integer units via
/// Skoda first; principal families at p-adic points are exact, everything
/// else runs the stabilization loop and may throw NotStabilizedError.
IdealGens tau_mixed(const IdealFamily& fam, const ParamPoint& c, const TauConfig& cfg = {});

/// (prod_i a_i^{m_i})^[1/q]. Uses (a^[q] b)^[1/q] = a b^[1/q] to keep each
/// m_i below g_i (q - 1) + 1, where g_i is the generator count of a_i.
IdealGens root_of_family_power(const IdealFamily& fam, std::vector<std::uint64_t> m, const FrobLevel& level);

struct SingleReduction {
  IdealGens ideal;  // J = prod a_i^{r_i}
  Rational lambda;
};

/// tau(a^{lambda r}) = tau(J^lambda) with J = prod_i a_i^{r_i}.
SingleReduction reduce_to_single(const IdealFamily& fam, const std::vector<std::uint64_t>& r,
                                 const Rational& lambda);

struct SkodaSplit {
  IdealGens factor;  // prod a_i^{k_i}
  ParamPoint residual;
};

/// Peels one unit of a_i while s_i >= m_i, so tau(a^s) = factor * tau(a^residual)
/// and every residual_i < m_i or untouched.
SkodaSplit skoda_reduce(const IdealFamily& fam, const ParamPoint& s);

struct VSearchConfig {
  /// Largest m tried before the search reports UnboundedError.
  std::uint64_t max_m = 1u << 12;
  GroebnerLimits limits;
};

/// max { m >= 0 : prod a_i^{m r_i} is not contained in I^[p^e] }.
/// Throws ZeroRegionError when I is the unit ideal and UnboundedError when
/// containment never happens up to the cap.
std::uint64_t v_number(const IdealFamily& fam, const std::vector<std::uint64_t>& r, const IdealGens& I, unsigned e,
                       const VSearchConfig& cfg = {});

struct ThresholdResult {
  /// V_e / p^e for e = 1..e_max (non-decreasing).
  std::vector<Rational> sequence;
  /// The limit lies in [lower, upper]: lower is the last term, upper is l*s
  /// where a^{l r} is in I and s counts the generators of a^r.
  Rational lower;
  Rational upper;
};

ThresholdResult f_threshold(const IdealFamily& fam, const std::vector<std::uint64_t>& r, const IdealGens& I,
                            unsigned e_max, const VSearchConfig& cfg = {});

struct Jump {
  Rational lower;  // exclusive
  Rational upper;  // inclusive, m / p^k
  IdealKey before;
  IdealKey after;
};

/// Scans tau(J^{m/p^k}), J = a^r, for m = 0..ceil(bound p^k) and reports each
/// m where the ideal changes, localizing a jumping number in ((m-1)/p^k, m/p^k].
std::vector<Jump> jumping_scan(const IdealFamily& fam, const std::vector<std::uint64_t>& r, unsigned k,
                               const Rational& bound, const TauConfig& cfg = {});

}  // namespace mixtau
