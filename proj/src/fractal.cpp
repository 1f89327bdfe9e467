#include <unordered_map>

#include "mixtau/error.hpp"
#include "mixtau/region.hpp"

namespace mixtau {

namespace {

unsigned log_base(std::uint64_t q, std::uint64_t p) {
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) throw PreconditionError("q must be a power of the characteristic");
  return e;
}

IdealGens family_monomial(const IdealFamily& fam, const std::vector<std::uint64_t>& exps) {
  IdealGens out = IdealGens::unit(fam.ring());
  for (std::size_t i = 0; i < fam.size(); ++i) out = ideal_product(out, ideal_power(fam[i], exps[i]));
  return out;
}

}  // namespace

GridFunction fractal_operator(const GridFunction& phi, std::uint64_t q, const std::vector<std::uint64_t>& b) {
  const unsigned e = log_base(q, phi.p());
  if (b.size() != phi.shape().size()) throw PreconditionError("shift vector has the wrong arity");
  for (auto bi : b) {
    if (bi >= q) throw PreconditionError("shift entries must lie in [0, q)");
  }
  if (phi.level() < e) {
    throw PreconditionError("resolution mismatch: grid level " + std::to_string(phi.level()) +
                            " is below the operator level " + std::to_string(e));
  }
  const unsigned k = phi.level() - e;
  const std::uint64_t stride = checked_pow(phi.p(), k);
  const auto shape = phi.box().grid_shape(phi.p(), k);
  const std::size_t n = grid_cell_count(shape);
  std::vector<Rational> values;
  values.reserve(n);
  std::vector<std::uint64_t> src(shape.size());
  for (std::size_t flat = 0; flat < n; ++flat) {
    const auto j = grid_unflatten(flat, shape);
    for (std::size_t i = 0; i < j.size(); ++i) src[i] = j[i] + b[i] * stride;
    values.push_back(phi.at(src));
  }
  return GridFunction(phi.box(), phi.p(), k, std::move(values));
}

FractalCheckReport verify_fractal_identity_report(const TauEvaluator& eval, const IdealGens& I, unsigned e,
                                                  const std::vector<std::uint64_t>& b, const Box& box, unsigned k) {
  const IdealFamily& fam = eval.family();
  if (b.size() != fam.size() || box.size() != fam.size()) {
    throw PreconditionError("shift vector and box must match the family size");
  }
  const auto l = fam.gen_counts();
  std::vector<std::uint64_t> colon_exps(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    if (b[i] + 1 < l[i]) {
      throw PreconditionError("shift entry " + std::to_string(b[i]) + " is below l_i - 1 = " +
                              std::to_string(l[i] - 1));
    }
    colon_exps[i] = b[i] - l[i] + 1;
  }
  const auto& limits = eval.config().limits;
  const FrobLevel level(*fam.ring(), e);
  const IdealGens colon = ideal_colon(bracket_power(I, level), family_monomial(fam, colon_exps), limits);
  const ReducedGB lhs_gb = buchberger(I, limits);
  const ReducedGB rhs_gb = buchberger(colon, limits);

  const std::uint64_t p = level.p();
  const auto q = static_cast<std::int64_t>(level.q());
  const auto shape = box.grid_shape(p, k);
  const std::size_t n = grid_cell_count(shape);
  FractalCheckReport report{true, 0, 0, colon};
  for (std::size_t flat = 0; flat < n; ++flat) {
    const ParamPoint t = grid_point(grid_unflatten(flat, shape), p, k);
    ParamPoint shifted = t;
    ParamPoint moved = t;
    for (std::size_t i = 0; i < t.size(); ++i) {
      shifted[i] = (t[i] + Rational(static_cast<std::int64_t>(b[i]))) / Rational(q);
      moved[i] = t[i] + Rational(static_cast<std::int64_t>(l[i] - 1));
    }
    const int lhs = chi_uncached(eval, lhs_gb, shifted);
    const int rhs = chi(eval, rhs_gb, moved);
    ++report.samples;
    if (lhs != rhs) ++report.mismatches;
  }
  report.holds = report.mismatches == 0;
  return report;
}

bool verify_fractal_identity(const IdealFamily& fam, const IdealGens& I, unsigned e,
                             const std::vector<std::uint64_t>& b, const Box& box, unsigned k, const TauConfig& cfg) {
  const TauEvaluator eval(fam, cfg);
  return verify_fractal_identity_report(eval, I, e, b, box, k).holds;
}

std::vector<CensusEntry> fractal_span_census(const TauEvaluator& eval, const IdealGens& I, const Box& box,
                                             unsigned e_max, unsigned reference_level) {
  const std::uint64_t p = eval.family().ring()->characteristic();
  const ReducedGB gb = buchberger(I, eval.config().limits);
  std::vector<CensusEntry> out;
  std::unordered_multimap<std::uint64_t, std::size_t> seen;
  for (unsigned e = 0; e <= e_max; ++e) {
    const GridFunction phi = sample_chi(eval, gb, box, reference_level + e);
    const std::uint64_t q = checked_pow(p, e);
    std::vector<std::uint64_t> b(box.size(), 0);
    for (;;) {
      GridFunction g = fractal_operator(phi, q, b);
      const std::uint64_t fp = g.fingerprint();
      bool fresh = true;
      for (auto [it, end] = seen.equal_range(fp); it != end; ++it) {
        if (out[it->second].function == g) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        seen.emplace(fp, out.size());
        out.push_back(CensusEntry{fp, std::move(g)});
      }
      std::size_t i = b.size();
      while (i > 0) {
        if (++b[i - 1] < q) break;
        b[i - 1] = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  return out;
}

}  // namespace mixtau
