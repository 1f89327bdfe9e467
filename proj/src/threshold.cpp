#include <algorithm>

#include "mixtau/error.hpp"
#include "mixtau/testideal.hpp"

namespace mixtau {

std::uint64_t v_number(const IdealFamily& fam, const std::vector<std::uint64_t>& r, const IdealGens& I, unsigned e,
                       const VSearchConfig& cfg) {
  require_same_ring(*fam.ring(), *I.ring());
  const IdealGens J = reduce_to_single(fam, r, Rational(1)).ideal;
  const ReducedGB target = buchberger(bracket_power(I, FrobLevel(*I.ring(), e)), cfg.limits);
  if (target.is_unit()) throw ZeroRegionError("v_number: I is the unit ideal, every power is contained");
  auto contained = [&](std::uint64_t m) { return ideal_contains(target, ideal_power(J, m)); };

  // J^0 = R is never inside a proper ideal, so m = 0 is always a witness.
  std::uint64_t lo = 0, hi = 1;
  while (!contained(hi)) {
    lo = hi;
    if (hi >= cfg.max_m)
      throw UnboundedError("v_number: a^{m r} not in I^[q] up to m=" + std::to_string(cfg.max_m) +
                           "; a^r is probably not in rad(I)");
    hi = std::min(hi * 2, cfg.max_m);
  }
  // invariant: lo not contained, hi contained
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (contained(mid))
      hi = mid;
    else
      lo = mid;
  }
  return lo;
}

ThresholdResult f_threshold(const IdealFamily& fam, const std::vector<std::uint64_t>& r, const IdealGens& I,
                            unsigned e_max, const VSearchConfig& cfg) {
  if (e_max < 1) throw PreconditionError("f_threshold needs e_max >= 1");
  ThresholdResult out;
  const std::uint64_t p = fam.ring()->characteristic();
  for (unsigned e = 1; e <= e_max; ++e) {
    const std::uint64_t v = v_number(fam, r, I, e, cfg);
    out.sequence.emplace_back(static_cast<std::int64_t>(v), static_cast<std::int64_t>(checked_pow(p, e)));
  }
  out.lower = out.sequence.back();
  const std::uint64_t l = v_number(fam, r, I, 0, cfg) + 1;
  const std::uint64_t s = reduce_to_single(fam, r, Rational(1)).ideal.size();
  out.upper = Rational(static_cast<std::int64_t>(l)) * Rational(static_cast<std::int64_t>(s));
  return out;
}

std::vector<Jump> jumping_scan(const IdealFamily& fam, const std::vector<std::uint64_t>& r, unsigned k,
                               const Rational& bound, const TauConfig& cfg) {
  if (bound.is_negative()) throw PreconditionError("jumping_scan bound must be non-negative");
  std::vector<Jump> jumps;
  if (bound.is_zero()) return jumps;
  const IdealFamily single({reduce_to_single(fam, r, Rational(1)).ideal});
  const auto q = static_cast<std::int64_t>(checked_pow(fam.ring()->characteristic(), k));
  const std::int64_t steps = bound.ceil_times(q);
  IdealKey previous = ideal_key(tau_mixed(single, {{Rational(0)}}, cfg));
  for (std::int64_t m = 1; m <= steps; ++m) {
    IdealKey current = ideal_key(buchberger(tau_mixed(single, {{Rational(m, q)}}, cfg), cfg.limits));
    if (current != previous) jumps.push_back({Rational(m - 1, q), Rational(m, q), previous, current});
    previous = std::move(current);
  }
  return jumps;
}

}  // namespace mixtau
