#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tame/bigint.hpp"

namespace tame {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Coefficient field descriptor: the rationals (characteristic 0), a prime
/// field F_p with p an odd prime, or an extension F_{p^k} presented by a
/// monic irreducible modulus of degree k over F_p. Characteristic 2 is
/// rejected at construction. Immutable once built.
class Field {
 public:
  std::uint64_t characteristic() const { return p_; }
  std::uint32_t extension_degree() const { return k_; }

  /// Modulus coefficients c_0..c_k (low to high, monic); empty when k == 1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  bool is_finite() const { return p_ != 0; }
  bool is_prime_field() const { return p_ != 0 && k_ == 1; }
  bool is_extension() const { return k_ > 1; }

  /// Number of elements p^k; only valid for finite fields.
  std::uint64_t order() const;

  bool same_as(const Field& other) const;

  /// "Q", "F_5", "F_9" and the like.
  std::string describe() const;

 private:
  friend FieldPtr make_field(std::uint64_t, std::uint32_t, const std::vector<std::uint64_t>&);
  Field() = default;

  std::uint64_t p_ = 0;
  std::uint32_t k_ = 1;
  std::vector<std::uint64_t> modulus_;
};

/// Validates and builds a field. The irreducibility of the modulus is
/// established by a deterministic Rabin-style test: gcd(f, X^(p^i) - X) must
/// be trivial for every i <= k/2.
FieldPtr make_field(std::uint64_t characteristic, std::uint32_t extension_degree = 1,
                    const std::vector<std::uint64_t>& modulus = {});

FieldPtr rationals();

/// One exact field element in canonical reduced form. Equality is
/// representation equality; mixing elements of distinct fields throws.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar from_int(const FieldPtr& f, std::int64_t v);
  static Scalar from_rational(const FieldPtr& f, Rational r);
  /// Extension element from coefficients over F_p (low to high, length <= k).
  static Scalar from_coeffs(const FieldPtr& f, std::vector<std::uint64_t> coeffs);
  /// Element with the given enumeration index in [0, order); finite only.
  static Scalar from_index(const FieldPtr& f, std::uint64_t index);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar negated() const;
  Scalar inverse() const;
  Scalar pow(std::int64_t e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical enumeration index; finite fields only.
  std::uint64_t index() const;

  /// Prime-field residue in [0, p); prime fields only.
  std::uint64_t residue() const;

  /// Canonical text: decimal residue, reduced fraction, or coefficient list.
  std::string str() const;

 private:
  FieldPtr field_;
  std::uint64_t pv_ = 0;            // prime-field residue
  std::vector<std::uint64_t> ev_;   // extension coefficients, length k
  Rational rv_;                     // rational value

  void require_same_field(const Scalar& o) const;
};

/// Least m >= 1 with a^m = 1; requires a nonzero over a finite field.
std::uint64_t multiplicative_order(const Scalar& a);

/// Least-index generator of the multiplicative group of a finite field.
Scalar primitive_element(const FieldPtr& f);

}  // namespace tame
