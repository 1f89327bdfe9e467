#include "mixtau/parser.hpp"

#include <cctype>
#include <string>

#include "mixtau/error.hpp"

namespace mixtau {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse_all() {
    Polynomial f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc = acc + term();
      } else if (peek() == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    return poly_pow(b, exponent());
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ring_, literal_mod_p());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->var_index(name);
      if (!idx) throw UnknownVariableError(name, start);
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::uint64_t literal_mod_p() {
    const unsigned __int128 p = ring_->characteristic();
    unsigned __int128 v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<unsigned>(text_[pos_] - '0')) % p;
      ++pos_;
    }
    return static_cast<std::uint64_t>(v);
  }

  std::uint64_t exponent() {
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (__builtin_mul_overflow(v, 10, &v) ||
          __builtin_add_overflow(v, static_cast<std::uint64_t>(text_[pos_] - '0'), &v))
        throw OverflowError("exponent overflow at position " + std::to_string(start));
      ++pos_;
    }
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse_all(); }

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_polynomial(piece, ring));
    } catch (const UnknownVariableError& e) {
      throw UnknownVariableError(e.name(), start + e.position());
    } catch (const ParseError& e) {
      std::string what = e.what();
      what = what.substr(0, what.rfind(" at position "));
      throw ParseError(what, start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace mixtau
