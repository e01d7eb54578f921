#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tame/field.hpp"

namespace tame {

/// Square matrix over one coefficient field, row-major, 0-based access.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldPtr& f, std::uint32_t n);

  static Matrix identity(const FieldPtr& f, std::uint32_t n);
  static Matrix diagonal(const std::vector<Scalar>& entries);
  static Matrix from_entries(const FieldPtr& f, std::uint32_t n, std::vector<Scalar> entries);

  const FieldPtr& field() const { return field_; }
  std::uint32_t size() const { return n_; }

  const Scalar& at(std::uint32_t r, std::uint32_t c) const;
  void set(std::uint32_t r, std::uint32_t c, Scalar v);

  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;
  Matrix inverse() const;
  Scalar det() const;
  bool is_invertible() const;
  bool is_diagonal() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string str() const;  // row-major scalar list "[[a,b],[c,d]]"

 private:
  FieldPtr field_;
  std::uint32_t n_ = 0;
  std::vector<Scalar> m_;

  void require_compatible(const Matrix& o) const;
};

/// Automorphism of GL_n in standard form: an optional transpose-inverse flip,
/// a field-automorphism twist theta = (entrywise x -> x^(p^e)) followed by
/// conjugation by S, and a radial factor A -> det(A)^c * A.
struct StandardAuto {
  bool transpose_inverse = false;
  Matrix conjugator;            // invertible
  std::uint32_t frobenius_exp = 0;  // reduced mod extension degree
  std::uint64_t det_character_exp = 0;  // reduced mod (q - 1)
};

/// Validates invariants (S invertible, exponents reduced) and normalizes.
StandardAuto make_standard_auto(bool transpose_inverse, Matrix conjugator,
                                std::uint32_t frobenius_exp, std::uint64_t det_character_exp);

StandardAuto identity_standard_auto(const FieldPtr& f, std::uint32_t n);

/// Applies the radial factor, then theta entrywise, then conjugation by S,
/// then the transpose-inverse flip, in that order.
Matrix apply_standard(const StandardAuto& phi, const Matrix& a);

/// Closed-form normalization of the functional composition a -> phi1(phi2(a)).
StandardAuto compose_standard(const StandardAuto& phi1, const StandardAuto& phi2);

/// The radial map A -> det(A)^c * A is bijective on GL_n(F_q) iff
/// gcd(n*c + 1, q - 1) = 1.
bool radial_is_bijective(const FieldPtr& f, std::uint32_t n, std::uint64_t c);

struct DiagonalFixingReport {
  bool fixes_all_diagonals = false;
  std::optional<Matrix> witness;  // first diagonal moved, when any
  // which of the three structural triviality conditions hold for this map
  bool omega_identity = false;
  bool frobenius_trivial = false;
  bool character_trivial = false;
};

/// Checks pointwise fixing of every invertible diagonal matrix by exhaustive
/// enumeration ((q-1)^n diagonals; enumeration_too_large beyond the cap).
DiagonalFixingReport diagonal_fixing_analysis(const StandardAuto& phi, std::uint64_t cap);

enum class ConjugatorRange { full_gl, monomial };

struct SurveyEntry {
  bool transpose_inverse;
  std::uint32_t frobenius_exp;
  std::uint64_t det_character_exp;
  Matrix conjugator;
  bool inner;  // trivial flip/twist/character
};

struct SurveyReport {
  std::uint32_t n = 0;
  std::uint64_t q = 0;
  ConjugatorRange range = ConjugatorRange::monomial;
  std::uint64_t combos_scanned = 0;
  std::vector<SurveyEntry> fixers;
};

/// Enumerates (flip, frobenius exponent, character exponent, S) with S drawn
/// from the requested range and lists every combination fixing all invertible
/// diagonals. Iteration order is fixed, so the report is deterministic.
SurveyReport survey_diagonal_fixers(const FieldPtr& f, std::uint32_t n, std::uint64_t cap,
                                    ConjugatorRange range = ConjugatorRange::monomial);

/// Deterministic enumeration helpers used by the survey and by tests.
std::vector<Matrix> all_invertible_diagonals(const FieldPtr& f, std::uint32_t n,
                                             std::uint64_t cap);
std::vector<Matrix> all_monomial_matrices(const FieldPtr& f, std::uint32_t n, std::uint64_t cap);
std::vector<Matrix> all_gl_matrices(const FieldPtr& f, std::uint32_t n, std::uint64_t cap);

}  // namespace tame
