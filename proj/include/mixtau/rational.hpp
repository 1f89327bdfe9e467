#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace mixtau {

/// Exact rational with 64-bit numerator and denominator. Always normalized
/// (gcd 1, positive denominator). Every operation is overflow-checked and
/// throws OverflowError instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_negative() const noexcept { return num_ < 0; }

  std::int64_t floor() const;
  std::int64_t ceil() const;
  /// Fractional part in [0, 1).
  Rational frac() const;

  /// ceil(value * factor); used for the exponents ceil(c p^e).
  std::int64_t ceil_times(std::int64_t factor) const;

  /// If the denominator is p^s, returns s.
  std::optional<unsigned> p_power_exponent(std::uint64_t p) const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  /// Accepts "n", "n/d", and "n/p^e" (the latter requires a caret exponent).
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Checked p^e; throws OverflowError if it leaves the 64-bit range.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

/// A non-negative p-adic rational num / p^e, normalized so that p does not
/// divide num unless e == 0.
class PAdicRational {
 public:
  PAdicRational(std::uint64_t p, std::uint64_t num, unsigned e);

  /// Fails with PreconditionError unless the denominator of r is a power of p.
  static PAdicRational from_rational(std::uint64_t p, const Rational& r);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t num() const noexcept { return num_; }
  unsigned e() const noexcept { return e_; }
  std::uint64_t denominator() const { return checked_pow(p_, e_); }

  Rational value() const;

  friend bool operator==(const PAdicRational&, const PAdicRational&) = default;
  friend std::strong_ordering operator<=>(const PAdicRational& a, const PAdicRational& b) {
    return a.value() <=> b.value();
  }

 private:
  std::uint64_t p_;
  std::uint64_t num_;
  unsigned e_;
};

}  // namespace mixtau
