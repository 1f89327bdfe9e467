#pragma once

// Reference implementations used only by tests. They avoid the library's
// arithmetic so disagreements point at real bugs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "mixtau/groebner.hpp"
#include "mixtau/polynomial.hpp"

namespace oracle {

using Exps = std::vector<std::uint64_t>;
using TermMap = std::map<Exps, std::uint64_t>;

inline TermMap to_map(const mixtau::Polynomial& f) {
  TermMap m;
  for (const auto& t : f.terms()) m[Exps(t.exps.begin(), t.exps.end())] = t.coeff.value;
  return m;
}

inline TermMap multiply(const TermMap& a, const TermMap& b, std::uint64_t p) {
  TermMap out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto& slot = out[e];
      slot = (slot + ca * cb) % p;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline TermMap power(const TermMap& f, std::uint64_t n, std::size_t arity, std::uint64_t p) {
  TermMap out{{Exps(arity, 0), 1 % p}};
  for (std::uint64_t i = 0; i < n; ++i) out = multiply(out, f, p);
  return out;
}

/// C(m, n) mod p from Pascal's triangle.
class Pascal {
 public:
  Pascal(std::uint64_t max_m, std::uint64_t p) : rows_(max_m + 1) {
    for (std::uint64_t m = 0; m <= max_m; ++m) {
      rows_[m].assign(m + 1, 1 % p);
      for (std::uint64_t n = 1; n < m; ++n) rows_[m][n] = (rows_[m - 1][n - 1] + rows_[m - 1][n]) % p;
    }
  }
  std::uint64_t operator()(std::uint64_t m, std::uint64_t n) const { return n > m ? 0 : rows_[m][n]; }

 private:
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Monomial ideals as lists of exponent vectors.
using MonomialIdeal = std::vector<Exps>;

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MonomialIdeal minimalize(MonomialIdeal gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) redundant = j != i && divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Exps& m) {
  MonomialIdeal out;
  for (const auto& g : I) {
    Exps q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = g[i] > m[i] ? g[i] - m[i] : 0;
    out.push_back(q);
  }
  return minimalize(out);
}

inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  MonomialIdeal out;
  for (const auto& a : I) {
    for (const auto& b : J) {
      Exps l(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
      out.push_back(l);
    }
  }
  return minimalize(out);
}

inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  MonomialIdeal out = colon_by_monomial(I, J.front());
  for (std::size_t i = 1; i < J.size(); ++i) out = intersect(out, colon_by_monomial(I, J[i]));
  return out;
}

/// (x^a)^[1/q] = x^{floor(a/q)}: the largest monomial whose q-th bracket
/// power still divides x^a.
inline Exps monomial_root(const Exps& a, std::uint64_t q) {
  Exps out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] / q;
  return out;
}

/// f lies in a monomial ideal iff each of its terms does.
inline bool in_monomial_ideal(const TermMap& f, const MonomialIdeal& I) {
  for (const auto& [e, c] : f) {
    bool hit = false;
    for (const auto& g : I) hit = hit || divides(g, e);
    if (!hit) return false;
  }
  return true;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline void monomials_up_to(std::size_t arity, std::uint64_t degree, Exps& cur, std::size_t i,
                            std::vector<Exps>& out) {
  if (i == arity) {
    out.push_back(cur);
    return;
  }
  for (std::uint64_t d = 0; d <= degree; ++d) {
    cur[i] = d;
    monomials_up_to(arity, degree - d, cur, i + 1, out);
  }
  cur[i] = 0;
}

/// Searches for cofactors h_i of degree <= cap with f = sum h_i g_i by
/// Gaussian elimination over F_p.
inline bool member_with_cofactor_cap(const TermMap& f, const std::vector<TermMap>& gens, std::size_t arity,
                                     std::uint64_t cap, std::uint64_t p) {
  std::vector<Exps> cof;
  Exps cur(arity, 0);
  monomials_up_to(arity, cap, cur, 0, cof);
  std::map<Exps, std::size_t> row_of;
  std::vector<TermMap> columns;
  for (const auto& g : gens) {
    for (const auto& m : cof) columns.push_back(multiply(g, TermMap{{m, 1}}, p));
  }
  for (const auto& col : columns)
    for (const auto& [e, c] : col) row_of.try_emplace(e, row_of.size());
  for (const auto& [e, c] : f) {
    if (!row_of.count(e)) return false;
  }
  const std::size_t rows = row_of.size(), cols = columns.size();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols + 1, 0));
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [e, c] : columns[j]) a[row_of[e]][j] = c;
  for (const auto& [e, c] : f) a[row_of[e]][cols] = c;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t piv = r;
    while (piv < rows && a[piv][j] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = inv_mod(a[r][j], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][j] == 0) continue;
      const std::uint64_t factor = a[i][j];
      for (std::size_t k = j; k <= cols; ++k) a[i][k] = (a[i][k] + (p - factor) * a[r][k]) % p;
    }
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return false;
  return true;
}

/// Random polynomial with up to `terms` terms of total degree <= `degree`.
inline mixtau::Polynomial random_poly(const mixtau::RingPtr& ring, std::mt19937_64& rng, std::uint64_t degree,
                                      std::size_t terms) {
  const std::uint64_t p = ring->characteristic();
  std::vector<mixtau::Term> ts;
  std::uniform_int_distribution<std::size_t> count(1, terms);
  const std::size_t n = count(rng);
  for (std::size_t t = 0; t < n; ++t) {
    mixtau::ExpVec e(ring->arity());
    std::uint64_t budget = std::uniform_int_distribution<std::uint64_t>(0, degree)(rng);
    for (std::size_t i = 0; i < ring->arity(); ++i) {
      const std::uint64_t d = std::uniform_int_distribution<std::uint64_t>(0, budget)(rng);
      e[i] = d;
      budget -= d;
    }
    ts.push_back({e, mixtau::FpScalar{std::uniform_int_distribution<std::uint64_t>(1, p - 1)(rng)}});
  }
  return mixtau::Polynomial::from_terms(ring, std::move(ts));
}

inline mixtau::Polynomial random_nonzero_poly(const mixtau::RingPtr& ring, std::mt19937_64& rng,
                                              std::uint64_t degree, std::size_t terms) {
  for (;;) {
    auto f = random_poly(ring, rng, degree, terms);
    if (!f.is_zero()) return f;
  }
}

}  // namespace oracle
