#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mixtau {

/// An element of the prime field F_p, stored as its representative in [0, p).
struct FpScalar {
  std::uint64_t value = 0;

  friend bool operator==(FpScalar, FpScalar) = default;
  friend auto operator<=>(FpScalar, FpScalar) = default;
};

/// Exponent vector of a monomial; its length is the ring arity.
class ExpVec {
 public:
  using Storage = boost::container::small_vector<std::uint64_t, 6>;

  ExpVec() = default;
  explicit ExpVec(std::size_t arity) : exps_(arity, 0) {}
  ExpVec(std::initializer_list<std::uint64_t> init) : exps_(init) {}
  template <class It>
  ExpVec(It first, It last) : exps_(first, last) {}

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint64_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t& operator[](std::size_t i) { return exps_[i]; }
  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }

  /// Total degree; throws OverflowError if it does not fit.
  std::uint64_t total_degree() const;
  bool divides(const ExpVec& other) const;
  bool is_zero() const;

  friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
  /// Componentwise difference; requires b to divide a.
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b);
  ExpVec scaled(std::uint64_t factor) const;
  static ExpVec lcm(const ExpVec& a, const ExpVec& b);

  friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.exps_ == b.exps_; }

  std::size_t hash() const noexcept;

 private:
  Storage exps_;
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& e) const noexcept { return e.hash(); }
};

/// Graded reverse lexicographic order, or a block order that compares the
/// first `eliminated` variables by grevlex before the rest (an elimination
/// order for those variables; used internally for colon ideals).
struct MonomialOrder {
  enum class Kind { grevlex, elimination };
  Kind kind = Kind::grevlex;
  std::size_t eliminated = 0;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// F_p[x_1, ..., x_r] with a fixed variable order. Immutable once built.
class Ring {
 public:
  /// Throws PreconditionError if p is not prime, the variable list is empty,
  /// or a name is repeated or not an identifier.
  static RingPtr make(std::uint64_t p, std::vector<std::string> vars, MonomialOrder order = {});

  std::uint64_t characteristic() const noexcept { return p_; }
  std::size_t arity() const noexcept { return vars_.size(); }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> var_index(std::string_view name) const;

  /// Monomial order comparison; `greater` means a is the larger monomial.
  std::strong_ordering compare(const ExpVec& a, const ExpVec& b) const;

  FpScalar reduce(std::uint64_t v) const { return {v % p_}; }
  FpScalar add(FpScalar a, FpScalar b) const;
  FpScalar sub(FpScalar a, FpScalar b) const;
  FpScalar neg(FpScalar a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  FpScalar mul(FpScalar a, FpScalar b) const;
  FpScalar pow(FpScalar a, std::uint64_t n) const;
  /// Throws PreconditionError on zero.
  FpScalar inv(FpScalar a) const;

  /// Same characteristic, variables and order.
  bool same_as(const Ring& other) const;

 private:
  Ring(std::uint64_t p, std::vector<std::string> vars, MonomialOrder order)
      : p_(p), vars_(std::move(vars)), order_(order) {}

  std::uint64_t p_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

bool is_prime(std::uint64_t n);

}  // namespace mixtau
