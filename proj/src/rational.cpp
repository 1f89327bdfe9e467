#include "mixtau/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "mixtau/error.hpp"

namespace mixtau {
namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

Rational make(i128 num, i128 den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

std::int64_t floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return narrow(q);
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = std::gcd(static_cast<std::uint64_t>(n < 0 ? -n : n), static_cast<std::uint64_t>(d));
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = narrow(n);
  den_ = narrow(d);
}

std::int64_t Rational::floor() const { return floor_div(num_, den_); }

std::int64_t Rational::ceil() const { return -floor_div(-static_cast<i128>(num_), den_); }

Rational Rational::frac() const { return *this - Rational(floor()); }

std::int64_t Rational::ceil_times(std::int64_t factor) const {
  i128 n = static_cast<i128>(num_) * factor;
  return -floor_div(-n, den_);
}

std::optional<unsigned> Rational::p_power_exponent(std::uint64_t p) const {
  std::uint64_t d = static_cast<std::uint64_t>(den_);
  unsigned s = 0;
  while (d % p == 0) {
    d /= p;
    ++s;
  }
  if (d != 1) return std::nullopt;
  return s;
}

Rational Rational::operator-() const { return make(-static_cast<i128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
              static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw PreconditionError("rational division by zero");
  return make(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

namespace {

std::int64_t parse_int(std::string_view text, std::size_t offset) {
  std::size_t start = 0;
  while (start < text.size() && text[start] == ' ') ++start;
  std::size_t end = text.size();
  while (end > start && text[end - 1] == ' ') --end;
  text = text.substr(start, end - start);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc::result_out_of_range) throw OverflowError("integer literal out of range");
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("malformed rational '" + std::string(text) + "'", offset + start);
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  std::int64_t num = parse_int(text.substr(0, slash), 0);
  std::string_view rest = text.substr(slash + 1);
  auto caret = rest.find('^');
  std::int64_t den;
  if (caret == std::string_view::npos) {
    den = parse_int(rest, slash + 1);
  } else {
    std::int64_t base = parse_int(rest.substr(0, caret), slash + 1);
    std::int64_t exp = parse_int(rest.substr(caret + 1), slash + 2 + caret);
    if (base < 2 || exp < 0) throw ParseError("malformed p-power denominator", slash + 1);
    den = static_cast<std::int64_t>(checked_pow(static_cast<std::uint64_t>(base), static_cast<unsigned>(exp)));
  }
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r)) throw OverflowError("p^e exceeds 64 bits");
  }
  return r;
}

PAdicRational::PAdicRational(std::uint64_t p, std::uint64_t num, unsigned e) : p_(p), num_(num), e_(e) {
  if (p < 2) throw PreconditionError("p-adic rational needs p >= 2");
  if (num_ == 0) e_ = 0;
  while (e_ > 0 && num_ % p_ == 0) {
    num_ /= p_;
    --e_;
  }
  (void)denominator();
}

PAdicRational PAdicRational::from_rational(std::uint64_t p, const Rational& r) {
  if (r.is_negative()) throw PreconditionError("negative exponent " + r.to_string());
  auto s = r.p_power_exponent(p);
  if (!s) throw PreconditionError(r.to_string() + " is not p-adic for p=" + std::to_string(p));
  return PAdicRational(p, static_cast<std::uint64_t>(r.num()), *s);
}

Rational PAdicRational::value() const {
  std::uint64_t d = denominator();
  if (d > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) ||
      num_ > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw OverflowError("p-adic rational does not fit a 64-bit rational");
  return Rational(static_cast<std::int64_t>(num_), static_cast<std::int64_t>(d));
}

}  // namespace mixtau
