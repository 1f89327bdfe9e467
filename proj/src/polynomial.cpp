#include "mixtau/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "mixtau/error.hpp"

namespace mixtau {
namespace {

void sort_terms(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.exps, b.exps) > 0; });
}

void append_monomial(std::string& out, const Ring& ring, const ExpVec& e) {
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += ring.variables()[i];
    if (e[i] > 1) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
}

std::string format(const Polynomial& f, const char* sep) {
  if (f.is_zero()) return "0";
  const Ring& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) out += sep;
    first = false;
    if (t.exps.is_zero()) {
      out += std::to_string(t.coeff.value);
      continue;
    }
    if (t.coeff.value != 1) {
      out += std::to_string(t.coeff.value);
      out += '*';
    }
    append_monomial(out, ring, t.exps);
  }
  return out;
}

}  // namespace

void require_same_ring(const Ring& a, const Ring& b) {
  if (!a.same_as(b)) throw PreconditionError("operands belong to different rings");
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::constant(RingPtr ring, std::uint64_t c) {
  FpScalar v = ring->reduce(c);
  std::vector<Term> terms;
  if (v.value != 0) terms.push_back({ExpVec(ring->arity()), v});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw PreconditionError("variable index out of range");
  ExpVec e(ring->arity());
  e[index] = 1;
  return monomial(std::move(ring), std::move(e));
}

Polynomial Polynomial::monomial(RingPtr ring, ExpVec exps, FpScalar coeff) {
  if (exps.size() != ring->arity()) throw PreconditionError("exponent vector length differs from ring arity");
  coeff = ring->reduce(coeff.value);
  std::vector<Term> terms;
  if (coeff.value != 0) terms.push_back({std::move(exps), coeff});
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Ring& r = *ring;
  for (auto& t : terms) {
    if (t.exps.size() != r.arity()) throw PreconditionError("exponent vector length differs from ring arity");
    t.coeff = r.reduce(t.coeff.value);
  }
  sort_terms(r, terms);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff = r.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.value == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.value == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps.total_degree());
  return d;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::monic() const {
  if (is_zero() || terms_.front().coeff.value == 1) return *this;
  return scaled(ring_->inv(terms_.front().coeff));
}

Polynomial Polynomial::scaled(FpScalar c) const {
  c = ring_->reduce(c.value);
  if (c.value == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mul_term(const ExpVec& exps, FpScalar coeff) const {
  coeff = ring_->reduce(coeff.value);
  if (coeff.value == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.exps + exps, ring_->mul(t.coeff, coeff)});
  // Monomial orders are compatible with multiplication, so order is kept.
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::exponents_scaled(std::uint64_t factor) const {
  if (factor == 0) return constant(ring_, 1);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.exps.scaled(factor), t.coeff});
  // Scaling by a positive factor preserves any monomial order.
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  const Ring& r = *a.ring_;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() && j != b.terms_.end()) {
    auto c = r.compare(i->exps, j->exps);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back(*j++);
    } else {
      FpScalar s = r.add(i->coeff, j->coeff);
      if (s.value != 0) out.push_back({i->exps, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms_.end());
  out.insert(out.end(), j, b.terms_.end());
  return Polynomial(a.ring_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(*a.ring_, *b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  if (a.is_monomial()) return b.mul_term(a.terms_[0].exps, a.terms_[0].coeff);
  if (b.is_monomial()) return a.mul_term(b.terms_[0].exps, b.terms_[0].coeff);
  const Ring& r = *a.ring_;
  std::unordered_map<ExpVec, std::uint64_t, ExpVecHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.exps + t.exps, 0);
      it->second = r.add({it->second}, r.mul(s.coeff, t.coeff)).value;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back({e, {c}});
  sort_terms(r, out);
  return Polynomial(a.ring_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const { return format(*this, " + "); }

std::string Polynomial::to_compact_string() const { return format(*this, "+"); }

std::size_t Polynomial::hash() const noexcept {
  std::size_t h = 0x51ed27;
  for (const auto& t : terms_) {
    h ^= t.exps.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= t.coeff.value * 0xff51afd7ed558ccdULL + (h << 6) + (h >> 2);
  }
  return h;
}

Polynomial poly_pow_naive(const Polynomial& f, std::uint64_t n) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial poly_pow(const Polynomial& f, std::uint64_t n) {
  if (n == 0) return Polynomial::constant(f.ring(), 1);
  if (f.is_zero()) return f;
  const Ring& r = *f.ring();
  if (f.is_monomial()) {
    const Term& t = f.terms()[0];
    return Polynomial::monomial(f.ring(), t.exps.scaled(n), r.pow(t.coeff, n));
  }
  const std::uint64_t p = r.characteristic();
  Polynomial result = Polynomial::constant(f.ring(), 1);
  std::uint64_t scale = 1;
  while (n) {
    std::uint64_t digit = n % p;
    n /= p;
    if (digit) result = result * poly_pow_naive(f, digit).exponents_scaled(scale);
    if (n) {
      if (__builtin_mul_overflow(scale, p, &scale)) throw OverflowError("exponent overflow in poly_pow");
    }
  }
  return result;
}

}  // namespace mixtau
