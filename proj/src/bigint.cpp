#include "tame/bigint.hpp"

#include <algorithm>

#include "tame/error.hpp"

namespace tame {

BigInt::BigInt(std::int64_t v) {
  neg_ = v < 0;
  std::uint64_t m = neg_ ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
  while (m != 0) {
    mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffull));
    m >>= 32;
  }
  if (mag_.empty()) neg_ = false;
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r.push_back(static_cast<std::uint32_t>(s & 0xffffffffull));
    carry = s >> 32;
  }
  if (carry) r.push_back(static_cast<std::uint32_t>(carry));
  return r;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> r;
  r.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += 0x100000000ll;
      borrow = 1;
    } else {
      borrow = 0;
    }
    r.push_back(static_cast<std::uint32_t>(s));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

int BigInt::cmp(const BigInt& other) const {
  if (neg_ != other.neg_) return neg_ ? -1 : 1;
  int m = cmp_mag(mag_, other.mag_);
  return neg_ ? -m : m;
}

BigInt BigInt::negated() const {
  BigInt r = *this;
  if (!r.is_zero()) r.neg_ = !r.neg_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.neg_ = false;
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.neg_ == b.neg_) {
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
    r.neg_ = a.neg_;
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
      r.neg_ = a.neg_;
    } else {
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
      r.neg_ = b.neg_;
    }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + b.negated(); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.is_zero() || b.is_zero()) return BigInt();
  BigInt r;
  r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
  for (std::size_t i = 0; i < a.mag_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.mag_.size(); ++j) {
      std::uint64_t cur = r.mag_[i + j] +
                          static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] + carry;
      r.mag_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
    }
    std::size_t k = i + b.mag_.size();
    while (carry) {
      std::uint64_t cur = r.mag_[k] + carry;
      r.mag_[k] = static_cast<std::uint32_t>(cur & 0xffffffffull);
      carry = cur >> 32;
      ++k;
    }
  }
  r.neg_ = a.neg_ != b.neg_;
  r.trim();
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) fail(errc::division_by_zero, "integer division by zero");
  // binary long division on magnitudes
  std::vector<std::uint32_t> qm(a.mag_.size(), 0);
  BigInt rem;
  for (std::size_t wi = a.mag_.size(); wi-- > 0;) {
    for (int bit = 31; bit >= 0; --bit) {
      // rem = rem*2 + next bit of |a|
      std::uint32_t carry = (a.mag_[wi] >> bit) & 1u;
      for (std::size_t i = 0; i < rem.mag_.size(); ++i) {
        std::uint32_t hi = rem.mag_[i] >> 31;
        rem.mag_[i] = (rem.mag_[i] << 1) | carry;
        carry = hi;
      }
      if (carry) rem.mag_.push_back(carry);
      if (cmp_mag(rem.mag_, b.mag_) >= 0) {
        rem.mag_ = sub_mag(rem.mag_, b.mag_);
        qm[wi] |= (1u << bit);
      }
    }
  }
  q = BigInt();
  q.mag_ = std::move(qm);
  q.neg_ = a.neg_ != b.neg_;
  q.trim();
  rem.neg_ = a.neg_;
  rem.trim();
  r = std::move(rem);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::pow(std::uint64_t e) const {
  BigInt base = *this, acc(1);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

BigInt BigInt::from_string(std::string_view s) {
  if (s.empty()) fail(errc::parse_error, "empty integer literal");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) fail(errc::parse_error, "sign without digits");
  BigInt r;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') fail(errc::parse_error, "bad digit in integer literal");
    r = r * BigInt(10) + BigInt(s[i] - '0');
  }
  if (neg && !r.is_zero()) r.neg_ = true;
  return r;
}

std::string BigInt::str() const {
  if (is_zero()) return "0";
  BigInt n = abs();
  std::string digits;
  const BigInt ten(10);
  while (!n.is_zero()) {
    BigInt q, r;
    divmod(n, ten, q, r);
    digits.push_back(static_cast<char>('0' + (r.mag_.empty() ? 0 : r.mag_[0])));
    n = std::move(q);
  }
  if (neg_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) fail(errc::division_by_zero, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  if (den_.is_negative()) {
    num_ = num_.negated();
    den_ = den_.negated();
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!(g == BigInt(1))) {
    BigInt q, r;
    BigInt::divmod(num_, g, q, r);
    num_ = q;
    BigInt::divmod(den_, g, q, r);
    den_ = q;
  }
}

Rational Rational::negated() const {
  Rational r = *this;
  r.num_ = r.num_.negated();
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + b.negated(); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

Rational Rational::from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

std::string Rational::str() const {
  if (den_ == BigInt(1)) return num_.str();
  return num_.str() + "/" + den_.str();
}

}  // namespace tame
