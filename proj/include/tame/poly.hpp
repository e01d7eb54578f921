#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tame/field.hpp"

namespace tame {

/// Hard cap on the total degree of any intermediate polynomial result.
/// Exceeding it throws degree_cap_exceeded instead of consuming memory.
/// Set once before long computations; reads are lock-free.
void set_degree_cap(std::uint32_t cap);
std::uint32_t degree_cap();

/// Exponent vector of one monomial in x_1..x_n. Exponents live in checked
/// 16-bit slots; variable indices are 1-based throughout the public API.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {}

  static Monomial unit(std::uint32_t nvars) { return Monomial(std::vector<std::uint16_t>(nvars, 0)); }
  static Monomial var(std::uint32_t nvars, std::uint32_t i, std::uint16_t e = 1);

  std::uint32_t nvars() const { return static_cast<std::uint32_t>(e_.size()); }
  std::uint32_t degree() const;
  std::uint16_t exp(std::uint32_t i) const;  // 1-based
  bool is_unit() const { return degree() == 0; }

  Monomial times(const Monomial& o) const;
  Monomial pow(std::uint32_t e) const;

  /// Graded-lex three-way compare with x_1 > x_2 > ... (degree first).
  static int cmp_grlex(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  const std::vector<std::uint16_t>& exponents() const { return e_; }

  /// "x2^2*x3" style; the unit monomial renders as "1".
  std::string str() const;

 private:
  std::vector<std::uint16_t> e_;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial with exact coefficients. Terms are kept in
/// strictly descending graded-lex order with no zero coefficients, so the
/// representation (and its serialization) is canonical.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(const FieldPtr& f, std::uint32_t nvars);
  static Polynomial constant(const Scalar& c, std::uint32_t nvars);
  static Polynomial variable(const FieldPtr& f, std::uint32_t nvars, std::uint32_t i);
  static Polynomial monomial(const Scalar& c, Monomial m);
  /// Sorts, merges duplicates, and drops zeros.
  static Polynomial from_terms(const FieldPtr& f, std::uint32_t nvars, std::vector<Term> terms);

  const FieldPtr& field() const { return field_; }
  std::uint32_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial negated() const;
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Evaluates with x_i replaced by images[i-1]; exact ring homomorphism.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// True iff every term has total degree exactly 1.
  bool is_linear() const;
  Scalar constant_term() const;
  Scalar coefficient_of(const Monomial& m) const;
  std::vector<Monomial> support() const;
  /// True iff no term involves x_i.
  bool independent_of(std::uint32_t i) const;

  /// Canonical text: "c*x1^2*x3 + c*x2" with terms in graded-lex order.
  std::string str() const;

 private:
  FieldPtr field_;
  std::uint32_t nvars_ = 0;
  std::vector<Term> terms_;

  void require_compatible(const Polynomial& o) const;
  void check_cap() const;
};

}  // namespace tame
