#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mixtau/ring.hpp"

namespace mixtau {

struct Term {
  ExpVec exps;
  FpScalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over F_p. Terms are kept sorted in decreasing monomial
/// order of the ring with no zero coefficients, so equality of term vectors
/// is equality of polynomials.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, std::uint64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, ExpVec exps, FpScalar coeff = {1});
  /// Canonicalizes an arbitrary term list: reduces coefficients, sorts,
  /// combines like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Nonzero constant.
  bool is_unit() const noexcept { return terms_.size() == 1 && terms_[0].exps.is_zero(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Maximum total degree of the terms; 0 for the zero polynomial.
  std::uint64_t degree() const;
  const Term& leading_term() const;
  const ExpVec& leading_monomial() const { return leading_term().exps; }

  Polynomial monic() const;
  Polynomial scaled(FpScalar c) const;
  Polynomial mul_term(const ExpVec& exps, FpScalar coeff) const;
  /// Multiplies every exponent by `factor`, keeping coefficients. For
  /// factor = p^k this is f^(p^k) over a prime field.
  Polynomial exponents_scaled(std::uint64_t factor) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Human-readable form, e.g. "x^2*y + 2*x*y^2".
  std::string to_string() const;
  /// Same without spaces, e.g. "x^2*y+2*x*y^2"; used for ideal keys.
  std::string to_compact_string() const;

  std::size_t hash() const noexcept;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

struct PolynomialHash {
  std::size_t operator()(const Polynomial& f) const noexcept { return f.hash(); }
};

/// f^n by base-p splitting: n = sum d_j p^j, f^n = prod_j (f^{d_j})^{p^j},
/// where each p^j-th power is an exponent scaling and each f^{d_j} comes
/// from square-and-multiply.
Polynomial poly_pow(const Polynomial& f, std::uint64_t n);

/// Plain repeated squaring without the Frobenius shortcut.
Polynomial poly_pow_naive(const Polynomial& f, std::uint64_t n);

/// Throws PreconditionError when the polynomials live in different rings.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace mixtau
