#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tame {

/// Arbitrary-precision signed integer, sign-magnitude over base-2^32 words.
/// Sized for exact rational coefficient arithmetic at desk scale; no attempt
/// at asymptotic cleverness.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t v);  // NOLINT implicit by design, mirrors int literals

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return mag_.empty(); }
  bool is_negative() const { return neg_; }

  BigInt negated() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  /// Truncated division: q = a/b rounded toward zero, r = a - q*b.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  static BigInt gcd(BigInt a, BigInt b);

  BigInt pow(std::uint64_t e) const;

  /// Three-way comparison: negative, zero, positive.
  int cmp(const BigInt& other) const;
  bool operator==(const BigInt& other) const { return cmp(other) == 0; }
  bool operator<(const BigInt& other) const { return cmp(other) < 0; }

  std::string str() const;

 private:
  std::vector<std::uint32_t> mag_;  // little-endian, no trailing zero words
  bool neg_ = false;                // false when zero

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
};

/// Exact rational with always-reduced representation, denominator > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);

  static Rational from_string(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rational negated() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  bool operator==(const Rational& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }

  std::string str() const;

 private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace tame
