#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "mixtau/testideal.hpp"

namespace mixtau {

/// The hypercube [0, l_1] x ... x [0, l_n], l_i > 0.
struct Box {
  std::vector<Rational> upper;

  explicit Box(std::vector<Rational> l);
  static Box unit(std::size_t n) { return Box(std::vector<Rational>(n, Rational(1))); }

  std::size_t size() const noexcept { return upper.size(); }
  /// Grid points per axis at spacing 1/p^k; throws PreconditionError unless
  /// every l_i p^k is an integer.
  std::vector<std::size_t> grid_shape(std::uint64_t p, unsigned k) const;
};

/// Row-major (first coordinate slowest) iteration helpers over a grid shape.
std::size_t grid_cell_count(const std::vector<std::size_t>& shape);
std::vector<std::size_t> grid_unflatten(std::size_t flat, const std::vector<std::size_t>& shape);
ParamPoint grid_point(const std::vector<std::size_t>& index, std::uint64_t p, unsigned k);

/// A rational-valued function sampled at the points i / p^k of a box.
class GridFunction {
 public:
  GridFunction(Box box, std::uint64_t p, unsigned k, std::vector<Rational> values);

  const Box& box() const noexcept { return box_; }
  std::uint64_t p() const noexcept { return p_; }
  unsigned level() const noexcept { return k_; }
  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  const std::vector<Rational>& values() const noexcept { return values_; }

  /// Value at a grid index; zero outside the box (extension by zero).
  Rational at(const std::vector<std::uint64_t>& index) const;

  /// FNV-1a over the exact value array. Equal functions share it; callers
  /// compare `values()` to rule out collisions.
  std::uint64_t fingerprint() const;

  friend bool operator==(const GridFunction& a, const GridFunction& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.shape_ == b.shape_ && a.values_ == b.values_;
  }

 private:
  Box box_;
  std::uint64_t p_;
  unsigned k_;
  std::vector<std::size_t> shape_;
  std::vector<Rational> values_;
};

/// Memoizing tau(a^c) evaluator over a fixed family. Safe to share between
/// threads; cached entries are never evicted.
class TauEvaluator {
 public:
  explicit TauEvaluator(IdealFamily fam, TauConfig cfg = {});

  const IdealFamily& family() const noexcept { return fam_; }
  const TauConfig& config() const noexcept { return cfg_; }

  /// Cached evaluation.
  IdealGens tau(const ParamPoint& c) const;
  /// Uncached evaluation, for large one-off point sets.
  IdealGens tau_uncached(const ParamPoint& c) const { return tau_mixed(fam_, c, cfg_); }

 private:
  IdealFamily fam_;
  TauConfig cfg_;
  mutable std::mutex mu_;
  mutable std::map<ParamPoint, IdealGens> cache_;
};

/// chi_a^I(c) = 1 iff tau(a^c) is not contained in I.
int chi(const IdealFamily& fam, const IdealGens& I, const ParamPoint& c, const TauConfig& cfg = {});
int chi(const TauEvaluator& eval, const ReducedGB& I, const ParamPoint& c);
int chi_uncached(const TauEvaluator& eval, const ReducedGB& I, const ParamPoint& c);

/// Samples chi_a^I at the level-k grid of `box`.
GridFunction sample_chi(const TauEvaluator& eval, const ReducedGB& I, const Box& box, unsigned k);

/// Constancy-region picture: each grid cell holds the palette index of
/// tau(a^c) at that exact grid point. Palette entries appear in first-seen
/// order of the row-major scan.
struct RegionRaster {
  Box box;
  std::uint64_t p;
  unsigned k;
  std::vector<std::size_t> shape;
  std::vector<std::uint32_t> cells;
  std::vector<IdealKey> palette;
  /// Reduced Groebner basis of each palette ideal, same order as `palette`.
  std::vector<IdealGens> palette_ideals;

  std::uint32_t at(const std::vector<std::size_t>& index) const;
};

/// `threads` > 1 evaluates cells concurrently; the output does not depend on it.
RegionRaster rasterize(const IdealFamily& fam, const Box& box, unsigned k, const TauConfig& cfg = {},
                       unsigned threads = 1);

/// True iff chi^{I_i}(c) = 1 for every I_i in `others` and chi^J(c) = 0.
/// With `others` = the palette ideals strictly inside J = tau(a^{c0}), this
/// decides tau(a^c) = tau(a^{c0}).
bool region_membership(const TauEvaluator& eval, const ParamPoint& c, const std::vector<IdealGens>& others,
                       const IdealGens& J);

/// T_{q|b} phi (t) = phi((t + b) / q), resampled at level k - e over the same box.
GridFunction fractal_operator(const GridFunction& phi, std::uint64_t q, const std::vector<std::uint64_t>& b);

struct FractalCheckReport {
  bool holds = true;
  std::size_t samples = 0;
  std::size_t mismatches = 0;
  IdealGens colon_ideal;
};

/// Compares T_{p^e|b} chi^I against T_{1|l-1} chi^{(I^[p^e] : a^{b-l+1})} on the
/// level-k grid of `box`, where l are the stored generator counts. Requires
/// b_i >= l_i - 1.
FractalCheckReport verify_fractal_identity_report(const TauEvaluator& eval, const IdealGens& I, unsigned e,
                                                  const std::vector<std::uint64_t>& b, const Box& box, unsigned k);
bool verify_fractal_identity(const IdealFamily& fam, const IdealGens& I, unsigned e,
                             const std::vector<std::uint64_t>& b, const Box& box, unsigned k,
                             const TauConfig& cfg = {});

struct CensusEntry {
  std::uint64_t fingerprint;
  GridFunction function;
};

/// Distinct restrictions of T_{q|b} chi^I (q = p^0..p^e_max, 0 <= b_i < q) to
/// the level-`reference_level` grid of `box`, in first-seen order. chi is
/// extended by zero outside the box.
std::vector<CensusEntry> fractal_span_census(const TauEvaluator& eval, const IdealGens& I, const Box& box,
                                             unsigned e_max, unsigned reference_level = 2);

/// A point whose coordinates are finite base-p expansions 0.d_1 d_2 ...
struct DigitPoint {
  std::vector<std::string> digits;

  ParamPoint value(std::uint64_t p) const;
  /// Coordinates as "0.d1d2..." strings.
  std::vector<std::string> to_strings() const;

  friend bool operator==(const DigitPoint&, const DigitPoint&) = default;
};

/// Boundary points of B^{(x,y)} for the F_3 family ((x+y), (xy)): start at
/// (0.1, 0.2) and apply, to (0.A1, 0.B2), the maps
/// (0.A01, 0.B22) and (0.A21, 0.B12). Returns the 2^depth points at `depth`.
std::vector<DigitPoint> staircase_boundary(unsigned depth);

}  // namespace mixtau
