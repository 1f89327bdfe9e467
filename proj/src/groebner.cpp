#include "mixtau/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mixtau/error.hpp"

namespace mixtau {
namespace {

struct DescendingOrder {
  const Ring* ring;
  bool operator()(const ExpVec& a, const ExpVec& b) const { return ring->compare(a, b) > 0; }
};

using WorkPoly = std::map<ExpVec, FpScalar, DescendingOrder>;

// Adds c * x^shift * g (skipping g's leading term when skip_lead is set).
void add_multiple(WorkPoly& work, const Ring& r, const Polynomial& g, const ExpVec& shift, FpScalar c, bool skip_lead) {
  auto it = g.terms().begin();
  if (skip_lead) ++it;
  for (; it != g.terms().end(); ++it) {
    FpScalar v = r.mul(it->coeff, c);
    auto [pos, inserted] = work.try_emplace(it->exps + shift, v);
    if (!inserted) {
      pos->second = r.add(pos->second, v);
      if (pos->second.value == 0) work.erase(pos);
    }
  }
}

const Polynomial* find_reducer(const std::vector<const Polynomial*>& divisors, const ExpVec& m) {
  for (const auto* d : divisors)
    if (d->leading_monomial().divides(m)) return d;
  return nullptr;
}

Polynomial reduce_full(const Polynomial& f, const std::vector<const Polynomial*>& divisors) {
  const Ring& r = *f.ring();
  if (f.is_zero() || divisors.empty()) return f;
  WorkPoly work{DescendingOrder{&r}};
  for (const auto& t : f.terms()) work.emplace(t.exps, t.coeff);
  std::vector<Term> rem;
  while (!work.empty()) {
    auto head = work.begin();
    ExpVec m = head->first;
    FpScalar c = head->second;
    work.erase(head);
    const Polynomial* d = find_reducer(divisors, m);
    if (!d) {
      rem.push_back({std::move(m), c});
      continue;
    }
    const Term& lt = d->leading_term();
    FpScalar factor = r.neg(r.mul(c, r.inv(lt.coeff)));
    add_multiple(work, r, *d, m - lt.exps, factor, true);
  }
  return Polynomial::from_terms(f.ring(), std::move(rem));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const ExpVec l = ExpVec::lcm(f.leading_monomial(), g.leading_monomial());
  const Ring& r = *f.ring();
  Polynomial a = f.mul_term(l - f.leading_monomial(), r.inv(f.leading_term().coeff));
  Polynomial b = g.mul_term(l - g.leading_monomial(), r.inv(g.leading_term().coeff));
  return a - b;
}

bool coprime(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

struct Pair {
  ExpVec lcm;
  std::size_t i, j;  // i < j
};

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  std::vector<const Polynomial*> ptrs;
  ptrs.reserve(divisors.size());
  for (const auto& d : divisors) {
    require_same_ring(*f.ring(), *d.ring());
    if (!d.is_zero()) ptrs.push_back(&d);
  }
  return reduce_full(f, ptrs);
}

ReducedGB buchberger(const IdealGens& ideal, const GroebnerLimits& limits) {
  const RingPtr& ring = ideal.ring();
  const Ring& r = *ring;
  if (ideal.is_zero()) return ReducedGB(ring, {});
  if (ideal.has_unit_generator()) return ReducedGB(ring, {Polynomial::constant(ring, 1)});

  std::vector<Polynomial> basis;
  std::vector<const Polynomial*> active;
  auto pair_less = [&r](const Pair& a, const Pair& b) {
    auto c = r.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  basis.reserve(ideal.size() * 4);
  auto add_element = [&](Polynomial g) {
    if (g.degree() > limits.max_degree) throw ResourceLimitError("Groebner basis element exceeds degree cap");
    basis.push_back(g.monic());
    std::size_t j = basis.size() - 1;
    for (std::size_t i = 0; i < j; ++i) {
      queue.insert({ExpVec::lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j});
      pending.insert({i, j});
    }
  };

  // Pointers into `basis` are refreshed after every insertion since the
  // vector may reallocate.
  auto refresh = [&] {
    active.clear();
    for (const auto& b : basis) active.push_back(&b);
  };

  if (ideal.has_unit_generator()) return ReducedGB(ring, {Polynomial::constant(ring, 1)});
  for (const auto& g : ideal.gens()) {
    refresh();
    Polynomial red = reduce_full(g, active);
    if (red.is_zero()) continue;
    if (red.is_unit()) return ReducedGB(ring, {Polynomial::constant(ring, 1)});
    add_element(std::move(red));
  }

  std::uint64_t processed = 0;
  while (!queue.empty()) {
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    if (++processed > limits.max_pairs) throw ResourceLimitError("Buchberger pair budget exhausted");
    if (pr.lcm.total_degree() > limits.max_degree) throw ResourceLimitError("S-pair degree exceeds cap");

    const ExpVec& li = basis[pr.i].leading_monomial();
    const ExpVec& lj = basis[pr.j].leading_monomial();
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k))) chain = true;
    }
    if (chain) continue;

    refresh();
    Polynomial red = reduce_full(s_polynomial(basis[pr.i], basis[pr.j]), active);
    if (red.is_zero()) continue;
    if (red.is_unit()) return ReducedGB(ring, {Polynomial::constant(ring, 1)});
    add_element(std::move(red));
  }

  // Minimal basis: drop elements whose leading monomial is divisible by
  // another one's (earlier index wins on ties).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& lj = basis[j].leading_monomial();
      const auto& li = basis[i].leading_monomial();
      if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
    }
    if (!redundant) keep.push_back(i);
  }

  std::vector<Polynomial> reduced;
  reduced.reserve(keep.size());
  for (std::size_t i : keep) {
    std::vector<const Polynomial*> others;
    for (std::size_t j : keep)
      if (j != i) others.push_back(&basis[j]);
    // Tail reduction only: the leading term is irreducible by construction.
    const Polynomial& g = basis[i];
    std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
    Polynomial tail_nf = reduce_full(Polynomial::from_terms(ring, std::move(tail)), others);
    reduced.push_back((Polynomial::monomial(ring, g.leading_monomial(), g.leading_term().coeff) + tail_nf).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&r](const Polynomial& a, const Polynomial& b) {
    const auto da = a.leading_monomial().total_degree();
    const auto db = b.leading_monomial().total_degree();
    if (da != db) return da < db;
    return r.compare(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return ReducedGB(ring, std::move(reduced));
}

bool ideal_member(const Polynomial& f, const ReducedGB& gb) { return normal_form(f, gb).is_zero(); }

bool ideal_contains(const ReducedGB& I, const IdealGens& J) {
  require_same_ring(*I.ring(), *J.ring());
  if (I.is_unit()) return true;
  for (const auto& g : J.gens())
    if (!ideal_member(g, I)) return false;
  return true;
}

bool ideal_contains(const IdealGens& I, const IdealGens& J) { return ideal_contains(buchberger(I), J); }

bool ideal_equal(const IdealGens& I, const IdealGens& J) {
  require_same_ring(*I.ring(), *J.ring());
  return buchberger(I).basis() == buchberger(J).basis();
}

IdealKey ideal_key(const ReducedGB& gb) {
  if (gb.is_zero()) return {"0"};
  std::string key;
  for (std::size_t i = 0; i < gb.basis().size(); ++i) {
    if (i) key += ';';
    key += gb.basis()[i].to_compact_string();
  }
  return {std::move(key)};
}

IdealKey ideal_key(const IdealGens& ideal) { return ideal_key(buchberger(ideal)); }

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring(), *g.ring());
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  const Ring& r = *f.ring();
  WorkPoly work{DescendingOrder{&r}};
  for (const auto& t : f.terms()) work.emplace(t.exps, t.coeff);
  const Term& lt = g.leading_term();
  FpScalar lc_inv = r.inv(lt.coeff);
  std::vector<Term> quotient;
  while (!work.empty()) {
    auto head = work.begin();
    if (!lt.exps.divides(head->first)) throw InvariantError("exact division failed: remainder is nonzero");
    ExpVec shift = head->first - lt.exps;
    FpScalar c = r.mul(head->second, lc_inv);
    work.erase(head);
    add_multiple(work, r, g, shift, r.neg(c), true);
    quotient.push_back({std::move(shift), c});
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

namespace {

// R[t] with t first and an elimination order for t.
RingPtr eliminating_ring(const Ring& base) {
  std::string name = "_t";
  while (base.var_index(name)) name += "_";
  std::vector<std::string> vars{name};
  vars.insert(vars.end(), base.variables().begin(), base.variables().end());
  return Ring::make(base.characteristic(), std::move(vars), {MonomialOrder::Kind::elimination, 1});
}

Polynomial embed(const Polynomial& f, const RingPtr& ext, std::uint64_t t_power) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    ExpVec e(ext->arity());
    e[0] = t_power;
    for (std::size_t i = 0; i < t.exps.size(); ++i) e[i + 1] = t.exps[i];
    terms.push_back({std::move(e), t.coeff});
  }
  return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial restrict_back(const Polynomial& f, const RingPtr& base) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({ExpVec(t.exps.begin() + 1, t.exps.end()), t.coeff});
  return Polynomial::from_terms(base, std::move(terms));
}

}  // namespace

IdealGens ideal_intersection(const IdealGens& I, const IdealGens& J, const GroebnerLimits& limits) {
  require_same_ring(*I.ring(), *J.ring());
  const RingPtr& base = I.ring();
  if (I.is_zero() || J.is_zero()) return IdealGens::zero(base);
  if (I.has_unit_generator()) return J;
  if (J.has_unit_generator()) return I;
  RingPtr ext = eliminating_ring(*base);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(embed(g, ext, 1));
  for (const auto& g : J.gens()) gens.push_back(embed(g, ext, 0) - embed(g, ext, 1));
  ReducedGB gb = buchberger(IdealGens(ext, std::move(gens)), limits);
  std::vector<Polynomial> out;
  for (const auto& g : gb.basis()) {
    bool t_free = std::all_of(g.terms().begin(), g.terms().end(), [](const Term& t) { return t.exps[0] == 0; });
    if (t_free) out.push_back(restrict_back(g, base));
  }
  return IdealGens(base, std::move(out));
}

IdealGens ideal_colon(const IdealGens& I, const IdealGens& J, const GroebnerLimits& limits) {
  require_same_ring(*I.ring(), *J.ring());
  const RingPtr& base = I.ring();
  if (J.is_zero()) throw PreconditionError("colon by the zero ideal");
  if (J.has_unit_generator()) return buchberger(I, limits).as_ideal();
  if (I.is_zero()) return I;
  ReducedGB gbI = buchberger(I, limits);
  if (gbI.is_unit()) return gbI.as_ideal();

  IdealGens acc = IdealGens::unit(base);
  for (const auto& f : J.gens()) {
    if (ideal_member(f, gbI)) continue;  // (I : f) = R
    IdealGens meet = ideal_intersection(gbI.as_ideal(), IdealGens::principal(f), limits);
    std::vector<Polynomial> quotients;
    for (const auto& g : meet.gens()) quotients.push_back(exact_divide(g, f));
    IdealGens colon_f(base, std::move(quotients));
    acc = acc.has_unit_generator() ? colon_f : ideal_intersection(acc, colon_f, limits);
  }
  return buchberger(acc, limits).as_ideal();
}

}  // namespace mixtau
