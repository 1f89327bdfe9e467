#include "mixtau/frobenius.hpp"

#include <unordered_map>

#include "mixtau/error.hpp"
#include "mixtau/rational.hpp"

namespace mixtau {

FrobLevel::FrobLevel(std::uint64_t p, unsigned e) : p_(p), e_(e), q_(checked_pow(p, e)) {}

IdealGens bracket_power(const IdealGens& ideal, const FrobLevel& level) {
  if (ideal.ring()->characteristic() != level.p()) throw PreconditionError("Frobenius level for a different p");
  std::vector<Polynomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.gens()) gens.push_back(g.exponents_scaled(level.q()));
  return IdealGens(ideal.ring(), std::move(gens));
}

IdealGens poly_bracket_root(const Polynomial& h, const FrobLevel& level) {
  if (h.ring()->characteristic() != level.p()) throw PreconditionError("Frobenius level for a different p");
  if (h.is_zero()) throw PreconditionError("bracket root of the zero polynomial");
  const std::uint64_t q = level.q();
  if (q == 1) return IdealGens::principal(h);
  const std::size_t n = h.ring()->arity();

  // Classes in first-seen order keep the output deterministic.
  std::unordered_map<ExpVec, std::size_t, ExpVecHash> class_of;
  std::vector<std::vector<Term>> classes;
  for (const auto& t : h.terms()) {
    ExpVec residue(n), quotient(n);
    for (std::size_t i = 0; i < n; ++i) {
      residue[i] = t.exps[i] % q;
      quotient[i] = t.exps[i] / q;
    }
    auto [it, inserted] = class_of.try_emplace(std::move(residue), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back({std::move(quotient), t.coeff});
  }
  std::vector<Polynomial> comps;
  comps.reserve(classes.size());
  for (auto& c : classes) comps.push_back(Polynomial::from_terms(h.ring(), std::move(c)));
  return IdealGens(h.ring(), std::move(comps));
}

IdealGens ideal_bracket_root(const IdealGens& b, const FrobLevel& level) {
  if (b.is_zero()) throw PreconditionError("bracket root of the zero ideal");
  std::vector<Polynomial> comps;
  for (const auto& g : b.gens()) {
    IdealGens r = poly_bracket_root(g, level);
    if (r.has_unit_generator()) return IdealGens::unit(b.ring());
    comps.insert(comps.end(), r.gens().begin(), r.gens().end());
  }
  return IdealGens(b.ring(), std::move(comps));
}

IdealGens root_of_power(const Polynomial& f, std::uint64_t m, const FrobLevel& level, RootStrategy strategy) {
  if (f.is_zero()) throw PreconditionError("root_of_power of the zero polynomial");
  if (strategy == RootStrategy::naive) return poly_bracket_root(poly_pow_naive(f, m), level);
  const std::uint64_t q = level.q();
  const std::uint64_t low = m % q, high = m / q;
  IdealGens root = poly_bracket_root(poly_pow(f, low), level);
  if (high == 0) return root;
  return ideal_product(root, IdealGens::principal(poly_pow(f, high)));
}

}  // namespace mixtau
