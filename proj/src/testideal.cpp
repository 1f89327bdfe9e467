#include "mixtau/testideal.hpp"

#include <algorithm>

#include "mixtau/error.hpp"

namespace mixtau {

bool ParamPoint::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c.is_zero(); });
}

std::optional<unsigned> ParamPoint::p_adic_level(std::uint64_t p) const {
  unsigned s = 0;
  for (const auto& c : coords) {
    auto e = c.p_power_exponent(p);
    if (!e) return std::nullopt;
    s = std::max(s, *e);
  }
  return s;
}

std::string ParamPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += coords[i].to_string();
  }
  return out + ")";
}

IdealFamily::IdealFamily(std::vector<IdealGens> ideals) : ideals_(std::move(ideals)) {
  if (ideals_.empty()) throw PreconditionError("ideal family needs at least one ideal");
  for (const auto& a : ideals_) {
    require_same_ring(*ideals_.front().ring(), *a.ring());
    if (a.is_zero()) throw PreconditionError("ideal family members must be nonzero");
  }
}

std::vector<std::uint64_t> IdealFamily::gen_counts() const {
  std::vector<std::uint64_t> out;
  out.reserve(ideals_.size());
  for (const auto& a : ideals_) out.push_back(a.size());
  return out;
}

bool IdealFamily::all_principal() const {
  return std::all_of(ideals_.begin(), ideals_.end(), [](const IdealGens& a) { return a.size() == 1; });
}

std::uint64_t IdealFamily::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& a : ideals_) d = std::max(d, a.max_degree());
  return d;
}

void TauConfig::validate() const {
  if (e_start > e_max) throw PreconditionError("TauConfig: e_start > e_max");
  if (confirm_window < 1) throw PreconditionError("TauConfig: confirm_window must be at least 1");
}

IdealGens tau_principal(const Polynomial& f, const PAdicRational& lambda) {
  if (f.is_zero()) throw PreconditionError("tau of the zero polynomial");
  if (lambda.p() != f.ring()->characteristic()) throw PreconditionError("exponent is p-adic for another p");
  return root_of_power(f, lambda.num(), FrobLevel(lambda.p(), lambda.e()));
}

IdealGens root_of_family_power(const IdealFamily& fam, std::vector<std::uint64_t> m, const FrobLevel& level) {
  if (m.size() != fam.size()) throw PreconditionError("exponent vector length differs from family size");
  const RingPtr& ring = fam.ring();
  const std::uint64_t q = level.q();
  IdealGens peeled = IdealGens::unit(ring);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const std::uint64_t g = fam[i].size();
    // Any product of at least g(q-1)+1 generators repeats one of them q times.
    unsigned __int128 threshold = static_cast<unsigned __int128>(g) * (q - 1) + 1;
    std::uint64_t h = 0;
    if (q > 1 && m[i] >= threshold) {
      h = static_cast<std::uint64_t>((m[i] - threshold) / q) + 1;
      m[i] -= h * q;
    }
    if (h) peeled = ideal_product(peeled, ideal_power(fam[i], h));
  }
  if (std::all_of(m.begin(), m.end(), [](auto v) { return v == 0; })) return peeled;

  // Walk the monomials in the generators of prod a_i^{m_i} without expanding the
  // power ideals. Each exponent k splits as k1*q + k0 and
  // (G^k0 * (G^k1)^q)^[1/q] = G^k1 * (G^k0)^[1/q], so only the small cofactor is
  // expanded before taking its root.
  std::vector<const Polynomial*> gens;
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (const auto& g : fam[i].gens()) {
      gens.push_back(&g);
      owner.push_back(i);
    }
  std::vector<std::uint64_t> k(gens.size(), 0);
  const Polynomial one = IdealGens::unit(ring).gens().front();
  std::vector<Polynomial> comps;
  bool unit = false;

  auto visit = [&]() {
    Polynomial outer = one, inner = one;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (k[j] >= q) outer = outer * poly_pow(*gens[j], k[j] / q);
      if (k[j] % q) inner = inner * poly_pow(*gens[j], k[j] % q);
    }
    const IdealGens root = poly_bracket_root(inner, level);
    for (const auto& c : root.gens()) {
      if (c.is_unit() && outer.is_unit()) {
        unit = true;
        return;
      }
      comps.push_back(c.is_unit() ? outer : outer * c);
    }
  };
  // Distribute m[i] over the generators of a_i, ideal by ideal.
  auto walk = [&](auto&& self, std::size_t j, std::uint64_t left) -> void {
    if (unit) return;
    const std::size_t i = owner[j];
    const bool last_of_ideal = j + 1 == gens.size() || owner[j + 1] != i;
    if (last_of_ideal) {
      k[j] = left;
      if (j + 1 == gens.size()) visit();
      else self(self, j + 1, m[owner[j + 1]]);
      return;
    }
    for (std::uint64_t a = 0; a <= left && !unit; ++a) {
      k[j] = a;
      self(self, j + 1, left - a);
    }
  };
  walk(walk, 0, m[0]);
  if (unit) return peeled;
  return ideal_product(IdealGens(ring, std::move(comps)), peeled);
}

SingleReduction reduce_to_single(const IdealFamily& fam, const std::vector<std::uint64_t>& r,
                                 const Rational& lambda) {
  if (r.size() != fam.size()) throw PreconditionError("direction length differs from family size");
  if (std::all_of(r.begin(), r.end(), [](auto v) { return v == 0; }))
    throw PreconditionError("direction must be nonzero");
  IdealGens J = IdealGens::unit(fam.ring());
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (r[i]) J = ideal_product(J, ideal_power(fam[i], r[i]));
  return {std::move(J), lambda};
}

SkodaSplit skoda_reduce(const IdealFamily& fam, const ParamPoint& s) {
  if (s.size() != fam.size()) throw PreconditionError("exponent length differs from family size");
  IdealGens factor = IdealGens::unit(fam.ring());
  ParamPoint residual = s;
  const auto counts = fam.gen_counts();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Rational m_i(static_cast<std::int64_t>(counts[i]));
    if (residual[i] < m_i) continue;
    const std::int64_t k = (residual[i] - m_i).floor() + 1;
    residual[i] -= Rational(k);
    factor = ideal_product(factor, ideal_power(fam[i], static_cast<std::uint64_t>(k)));
  }
  return {std::move(factor), std::move(residual)};
}

namespace {

void check_degree_bound(const IdealFamily& fam, const ParamPoint& c, const IdealGens& result) {
  Rational total(0);
  for (const auto& v : c.coords) total += v;
  const std::int64_t bound = (Rational(static_cast<std::int64_t>(fam.max_degree())) * total).floor();
  for (const auto& g : result.gens()) {
    if (static_cast<std::int64_t>(g.degree()) > bound)
      throw InvariantError("test ideal generator " + g.to_string() + " exceeds degree bound " +
                           std::to_string(bound) + " at " + c.to_string());
  }
}

IdealGens tau_core(const IdealFamily& fam, const ParamPoint& c, const TauConfig& cfg) {
  const RingPtr& ring = fam.ring();
  if (c.is_zero()) return IdealGens::unit(ring);
  const std::uint64_t p = ring->characteristic();
  const auto level = c.p_adic_level(p);

  if (cfg.fast_paths && level && fam.all_principal()) {
    const std::uint64_t q = checked_pow(p, *level);
    std::vector<std::uint64_t> r;
    for (const auto& v : c.coords) r.push_back(static_cast<std::uint64_t>(v.ceil_times(static_cast<std::int64_t>(q))));
    if (std::all_of(r.begin(), r.end(), [](auto v) { return v == 0; })) return IdealGens::unit(ring);
    SingleReduction single = reduce_to_single(fam, r, Rational(1, static_cast<std::int64_t>(q)));
    IdealGens out = tau_principal(single.ideal.gens().front(), PAdicRational(p, 1, *level));
    if (cfg.degree_check) check_degree_bound(fam, c, out);
    return out;
  }

  const unsigned start = level ? std::max(cfg.e_start, *level) : cfg.e_start;
  IdealKey previous;
  unsigned agree = 0;
  for (unsigned e = start; e <= cfg.e_max; ++e) {
    FrobLevel lvl(p, e);
    std::vector<std::uint64_t> m;
    for (const auto& v : c.coords) m.push_back(static_cast<std::uint64_t>(v.ceil_times(static_cast<std::int64_t>(lvl.q()))));
    IdealGens J = root_of_family_power(fam, m, lvl);
    IdealKey key = ideal_key(buchberger(J, cfg.limits));
    agree = (agree > 0 && key == previous) ? agree + 1 : 1;
    previous = std::move(key);
    if (agree >= cfg.confirm_window) {
      if (cfg.degree_check && level) check_degree_bound(fam, c, J);
      return J;
    }
  }
  throw NotStabilizedError(cfg.e_max);
}

}  // namespace

IdealGens tau_mixed(const IdealFamily& fam, const ParamPoint& c, const TauConfig& cfg) {
  cfg.validate();
  if (c.size() != fam.size()) throw PreconditionError("exponent length differs from family size");
  for (const auto& v : c.coords)
    if (v.is_negative()) throw PreconditionError("negative exponent in " + c.to_string());
  if (!cfg.fast_paths) return tau_core(fam, c, cfg);
  SkodaSplit split = skoda_reduce(fam, c);
  if (split.factor.has_unit_generator()) return tau_core(fam, c, cfg);
  return ideal_product(split.factor, tau_core(fam, split.residual, cfg));
}

}  // namespace mixtau
