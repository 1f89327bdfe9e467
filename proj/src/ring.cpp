#include "mixtau/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mixtau/error.hpp"

namespace mixtau {

std::uint64_t ExpVec::total_degree() const {
  std::uint64_t d = 0;
  for (auto v : exps_)
    if (__builtin_add_overflow(d, v, &d)) throw OverflowError("total degree overflow");
  return d;
}

bool ExpVec::divides(const ExpVec& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool ExpVec::is_zero() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto v) { return v == 0; });
}

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (__builtin_add_overflow(a.exps_[i], b.exps_[i], &r.exps_[i])) throw OverflowError("exponent overflow");
  return r;
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b.exps_[i] > a.exps_[i]) throw InvariantError("monomial subtraction below zero");
    r.exps_[i] = a.exps_[i] - b.exps_[i];
  }
  return r;
}

ExpVec ExpVec::scaled(std::uint64_t factor) const {
  ExpVec r(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (__builtin_mul_overflow(exps_[i], factor, &r.exps_[i])) throw OverflowError("exponent overflow");
  return r;
}

ExpVec ExpVec::lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

std::size_t ExpVec::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : exps_) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (n) {
    if (n & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    n >>= 1;
  }
  return r;
}

// grevlex on the index range [lo, hi)
std::strong_ordering grevlex(const ExpVec& a, const ExpVec& b, std::size_t lo, std::size_t hi) {
  u128 da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

RingPtr Ring::make(std::uint64_t p, std::vector<std::string> vars, MonomialOrder order) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  if (vars.empty()) throw PreconditionError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw PreconditionError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable '" + v + "'");
  }
  if (order.kind == MonomialOrder::Kind::elimination && order.eliminated > vars.size())
    throw PreconditionError("elimination block larger than the ring");
  return RingPtr(new Ring(p, std::move(vars), order));
}

std::optional<std::size_t> Ring::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::strong_ordering Ring::compare(const ExpVec& a, const ExpVec& b) const {
  if (order_.kind == MonomialOrder::Kind::grevlex) return grevlex(a, b, 0, a.size());
  auto head = grevlex(a, b, 0, order_.eliminated);
  if (head != std::strong_ordering::equal) return head;
  return grevlex(a, b, order_.eliminated, a.size());
}

FpScalar Ring::add(FpScalar a, FpScalar b) const {
  std::uint64_t s = a.value + b.value;
  if (s < a.value || s >= p_) s -= p_;
  return {s};
}

FpScalar Ring::sub(FpScalar a, FpScalar b) const {
  return {a.value >= b.value ? a.value - b.value : a.value + (p_ - b.value)};
}

FpScalar Ring::mul(FpScalar a, FpScalar b) const { return {mulmod(a.value, b.value, p_)}; }

FpScalar Ring::pow(FpScalar a, std::uint64_t n) const { return {powmod(a.value, n, p_)}; }

FpScalar Ring::inv(FpScalar a) const {
  if (a.value == 0) throw PreconditionError("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (p_ == other.p_ && vars_ == other.vars_ && order_ == other.order_);
}

}  // namespace mixtau
