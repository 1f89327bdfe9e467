#include "mixtau/ideal.hpp"

#include <unordered_set>

#include "mixtau/error.hpp"

namespace mixtau {

IdealGens::IdealGens(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  std::unordered_set<Polynomial, PolynomialHash> seen;
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    require_same_ring(*ring_, *g.ring());
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (seen.insert(m).second) gens_.push_back(std::move(m));
  }
}

IdealGens IdealGens::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return IdealGens(std::move(ring), {std::move(one)});
}

IdealGens IdealGens::principal(const Polynomial& f) { return IdealGens(f.ring(), {f}); }

bool IdealGens::has_unit_generator() const noexcept {
  for (const auto& g : gens_)
    if (g.is_unit()) return true;
  return false;
}

std::uint64_t IdealGens::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::string IdealGens::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

IdealGens ideal_product(const IdealGens& a, const IdealGens& b) {
  require_same_ring(*a.ring(), *b.ring());
  if (a.has_unit_generator()) return b;
  if (b.has_unit_generator()) return a;
  std::vector<Polynomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) out.push_back(f * g);
  return IdealGens(a.ring(), std::move(out));
}

namespace {

// Visits every product of powers whose exponents sum to `remaining`, fixing
// generator `index` and beyond.
void enumerate(const std::vector<std::vector<Polynomial>>& powers, std::size_t index, std::uint64_t remaining,
               const Polynomial& prefix, std::vector<Polynomial>& out) {
  if (index + 1 == powers.size()) {
    out.push_back(prefix * powers[index][remaining]);
    return;
  }
  for (std::uint64_t k = remaining + 1; k-- > 0;) enumerate(powers, index + 1, remaining - k, prefix * powers[index][k], out);
}

}  // namespace

IdealGens ideal_power(const IdealGens& ideal, std::uint64_t m) {
  if (m == 0) return IdealGens::unit(ideal.ring());
  if (ideal.is_zero()) return ideal;
  if (ideal.has_unit_generator()) return IdealGens::unit(ideal.ring());
  if (ideal.size() == 1) return IdealGens::principal(poly_pow(ideal.gens()[0], m));
  if (m > (std::uint64_t{1} << 20)) throw ResourceLimitError("ideal power exponent too large");
  std::vector<std::vector<Polynomial>> powers(ideal.size());
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    powers[i].reserve(m + 1);
    powers[i].push_back(Polynomial::constant(ideal.ring(), 1));
    for (std::uint64_t k = 1; k <= m; ++k) powers[i].push_back(powers[i].back() * ideal.gens()[i]);
  }
  std::vector<Polynomial> out;
  enumerate(powers, 0, m, Polynomial::constant(ideal.ring(), 1), out);
  return IdealGens(ideal.ring(), std::move(out));
}

}  // namespace mixtau
