#include "tame/field.hpp"

#include <algorithm>

#include "tame/error.hpp"

namespace tame {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) fail(errc::division_by_zero, "inverse of zero residue");
  // extended Euclid on signed 128-bit intermediates
  __int128 t = 0, new_t = 1;
  __int128 r = static_cast<__int128>(p), new_r = static_cast<__int128>(a % p);
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// --- dense polynomials over F_p, little-endian coefficient vectors ---

using FpPoly = std::vector<u64>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
  }
  fp_trim(r);
  return r;
}

// remainder of a modulo monic m
FpPoly fp_rem(FpPoly a, const FpPoly& m, u64 p) {
  fp_trim(a);
  while (a.size() >= m.size()) {
    u64 lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = sub_mod(a[shift + i], mul_mod(lead, m[i], p), p);
    }
    fp_trim(a);
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    // make b monic for division
    u64 lead_inv = inv_mod(b.back(), p);
    FpPoly bm = b;
    for (auto& c : bm) c = mul_mod(c, lead_inv, p);
    FpPoly r = fp_rem(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_powmod(FpPoly base, u64 e, const FpPoly& m, u64 p) {
  FpPoly acc{1};
  base = fp_rem(std::move(base), m, p);
  while (e) {
    if (e & 1) acc = fp_rem(fp_mul(acc, base, p), m, p);
    base = fp_rem(fp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return acc;
}

// extended Euclid: s with s*a == gcd (mod m); used for inverses, so the
// caller requires gcd == 1
FpPoly fp_invmod(const FpPoly& a, const FpPoly& m, u64 p) {
  FpPoly r0 = m, r1 = fp_rem(a, m, p);
  FpPoly s0{}, s1{1};
  if (r1.empty()) fail(errc::division_by_zero, "inverse of zero field element");
  while (!r1.empty()) {
    // divide r0 by r1: quotient computed step by step
    u64 lead_inv = inv_mod(r1.back(), p);
    FpPoly q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
    FpPoly rem = r0;
    fp_trim(rem);
    while (rem.size() >= r1.size() && !rem.empty()) {
      u64 c = mul_mod(rem.back(), lead_inv, p);
      std::size_t shift = rem.size() - r1.size();
      q[shift] = add_mod(q[shift], c, p);
      for (std::size_t i = 0; i < r1.size(); ++i) {
        rem[shift + i] = sub_mod(rem[shift + i], mul_mod(c, r1[i], p), p);
      }
      fp_trim(rem);
    }
    FpPoly s2 = s0;
    FpPoly qs = fp_mul(q, s1, p);
    s2.resize(std::max(s2.size(), qs.size()), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = sub_mod(s2[i], qs[i], p);
    fp_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) fail(errc::division_by_zero, "element not invertible modulo modulus");
  u64 scale = inv_mod(r0[0], p);
  for (auto& c : s0) c = mul_mod(c, scale, p);
  return fp_rem(std::move(s0), m, p);
}

}  // namespace

std::uint64_t Field::order() const {
  if (!is_finite()) fail(errc::infinite_field, "order of an infinite field");
  u64 q = 1;
  for (std::uint32_t i = 0; i < k_; ++i) q *= p_;
  return q;
}

bool Field::same_as(const Field& other) const {
  return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

std::string Field::describe() const {
  if (!is_finite()) return "Q";
  return "F_" + std::to_string(order());
}

FieldPtr make_field(std::uint64_t characteristic, std::uint32_t extension_degree,
                    const std::vector<std::uint64_t>& modulus) {
  if (characteristic == 2) fail(errc::characteristic_two, "characteristic 2 is not supported");
  if (characteristic != 0 && !is_prime_u64(characteristic)) {
    fail(errc::not_prime, "characteristic " + std::to_string(characteristic) + " is not prime");
  }
  if (extension_degree < 1) fail(errc::bad_modulus, "extension degree must be >= 1");
  if (characteristic == 0 && extension_degree != 1) {
    fail(errc::bad_modulus, "extensions of the rationals are not supported");
  }
  if ((extension_degree > 1) != !modulus.empty()) {
    fail(errc::bad_modulus, "modulus must be supplied exactly when extension degree > 1");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = characteristic;
  f->k_ = extension_degree;

  if (extension_degree > 1) {
    const u64 p = characteristic;
    if (modulus.size() != static_cast<std::size_t>(extension_degree) + 1) {
      fail(errc::bad_modulus, "modulus must list degree+1 coefficients");
    }
    FpPoly m(modulus);
    for (auto& c : m) c %= p;
    if (m.back() != 1) fail(errc::bad_modulus, "modulus must be monic");
    // no irreducible factor of degree <= k/2 may divide the modulus
    FpPoly frob{0, 1};  // X
    for (std::uint32_t i = 1; i <= extension_degree / 2; ++i) {
      frob = fp_powmod(std::move(frob), p, m, p);
      FpPoly diff = frob;
      diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
      diff[1] = sub_mod(diff[1], 1, p);
      fp_trim(diff);
      FpPoly g = fp_gcd(m, diff, p);
      if (g.size() != 1) {
        fail(errc::reducible_modulus, "modulus is reducible over F_" + std::to_string(p));
      }
    }
    f->modulus_ = std::move(m);
    // field order must fit in 64 bits with headroom
    long double q = 1;
    for (std::uint32_t i = 0; i < extension_degree; ++i) q *= static_cast<long double>(p);
    if (q > 9e18L) fail(errc::bad_modulus, "field order exceeds the supported range");
  }
  return f;
}

FieldPtr rationals() { return make_field(0); }

// --- Scalar ---

void Scalar::require_same_field(const Scalar& o) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    fail(errc::field_mismatch, "operands belong to different fields");
  }
}

Scalar Scalar::zero(const FieldPtr& f) {
  Scalar s;
  s.field_ = f;
  if (f->is_extension()) s.ev_.assign(f->extension_degree(), 0);
  return s;
}

Scalar Scalar::one(const FieldPtr& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldPtr& f, std::int64_t v) {
  Scalar s = zero(f);
  if (!f->is_finite()) {
    s.rv_ = Rational(BigInt(v));
    return s;
  }
  u64 p = f->characteristic();
  u64 r = v >= 0 ? static_cast<u64>(v) % p : p - ((static_cast<u64>(-(v + 1)) + 1) % p);
  if (r == p) r = 0;
  if (f->is_extension()) {
    s.ev_[0] = r;
  } else {
    s.pv_ = r;
  }
  return s;
}

Scalar Scalar::from_rational(const FieldPtr& f, Rational r) {
  if (f->is_finite()) fail(errc::field_mismatch, "rational literal over a finite field");
  Scalar s = zero(f);
  s.rv_ = std::move(r);
  return s;
}

Scalar Scalar::from_coeffs(const FieldPtr& f, std::vector<std::uint64_t> coeffs) {
  if (!f->is_extension()) fail(errc::bad_modulus, "coefficient form requires an extension field");
  if (coeffs.size() > f->extension_degree()) {
    fail(errc::bad_modulus, "coefficient list longer than extension degree");
  }
  Scalar s = zero(f);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s.ev_[i] = coeffs[i] % f->characteristic();
  return s;
}

Scalar Scalar::from_index(const FieldPtr& f, std::uint64_t index) {
  if (!f->is_finite()) fail(errc::infinite_field, "enumeration requires a finite field");
  Scalar s = zero(f);
  u64 p = f->characteristic();
  if (f->is_extension()) {
    for (std::uint32_t i = 0; i < f->extension_degree(); ++i) {
      s.ev_[i] = index % p;
      index /= p;
    }
  } else {
    s.pv_ = index % p;
  }
  return s;
}

bool Scalar::is_zero() const {
  if (!field_->is_finite()) return rv_.is_zero();
  if (field_->is_extension()) {
    return std::all_of(ev_.begin(), ev_.end(), [](u64 c) { return c == 0; });
  }
  return pv_ == 0;
}

bool Scalar::is_one() const { return *this == one(field_); }

bool Scalar::operator==(const Scalar& o) const {
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) return false;
  if (!field_->is_finite()) return rv_ == o.rv_;
  if (field_->is_extension()) return ev_ == o.ev_;
  return pv_ == o.pv_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar r = zero(field_);
  if (!field_->is_finite()) {
    r.rv_ = rv_ + o.rv_;
  } else if (field_->is_extension()) {
    u64 p = field_->characteristic();
    for (std::size_t i = 0; i < ev_.size(); ++i) r.ev_[i] = add_mod(ev_[i], o.ev_[i], p);
  } else {
    r.pv_ = add_mod(pv_, o.pv_, field_->characteristic());
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + o.negated(); }

Scalar Scalar::negated() const {
  Scalar r = zero(field_);
  if (!field_->is_finite()) {
    r.rv_ = rv_.negated();
  } else if (field_->is_extension()) {
    u64 p = field_->characteristic();
    for (std::size_t i = 0; i < ev_.size(); ++i) r.ev_[i] = sub_mod(0, ev_[i], p);
  } else {
    r.pv_ = sub_mod(0, pv_, field_->characteristic());
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar r = zero(field_);
  if (!field_->is_finite()) {
    r.rv_ = rv_ * o.rv_;
  } else if (field_->is_extension()) {
    u64 p = field_->characteristic();
    FpPoly prod = fp_mul(FpPoly(ev_.begin(), ev_.end()), FpPoly(o.ev_.begin(), o.ev_.end()), p);
    prod = fp_rem(std::move(prod), field_->modulus(), p);
    for (std::size_t i = 0; i < prod.size(); ++i) r.ev_[i] = prod[i];
  } else {
    r.pv_ = mul_mod(pv_, o.pv_, field_->characteristic());
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
  Scalar r = zero(field_);
  if (!field_->is_finite()) {
    r.rv_ = rv_.inverse();
  } else if (field_->is_extension()) {
    u64 p = field_->characteristic();
    FpPoly inv = fp_invmod(FpPoly(ev_.begin(), ev_.end()), field_->modulus(), p);
    for (std::size_t i = 0; i < inv.size(); ++i) r.ev_[i] = inv[i];
  } else {
    r.pv_ = inv_mod(pv_, field_->characteristic());
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(std::int64_t e) const {
  Scalar base = e < 0 ? inverse() : *this;
  u64 n = e < 0 ? static_cast<u64>(-(e + 1)) + 1 : static_cast<u64>(e);
  Scalar acc = one(field_);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

std::uint64_t Scalar::index() const {
  if (!field_->is_finite()) fail(errc::infinite_field, "enumeration requires a finite field");
  if (field_->is_extension()) {
    u64 idx = 0;
    u64 p = field_->characteristic();
    for (std::size_t i = ev_.size(); i-- > 0;) idx = idx * p + ev_[i];
    return idx;
  }
  return pv_;
}

std::uint64_t Scalar::residue() const {
  if (!field_->is_prime_field()) fail(errc::invalid_argument, "residue requires a prime field");
  return pv_;
}

std::string Scalar::str() const {
  if (!field_->is_finite()) return rv_.str();
  if (field_->is_extension()) {
    std::string s = "[";
    for (std::size_t i = 0; i < ev_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(ev_[i]);
    }
    s += "]";
    return s;
  }
  return std::to_string(pv_);
}

std::uint64_t multiplicative_order(const Scalar& a) {
  const FieldPtr& f = a.field();
  if (!f->is_finite()) fail(errc::infinite_field, "multiplicative order over an infinite field");
  if (a.is_zero()) fail(errc::zero_element, "multiplicative order of zero");
  u64 group = f->order() - 1;
  // factor the group order, then strip primes while the power stays 1
  u64 ord = group;
  u64 rest = group;
  for (u64 d = 2; d * d <= rest; ++d) {
    if (rest % d) continue;
    while (rest % d == 0) rest /= d;
    while (ord % d == 0 && a.pow(static_cast<std::int64_t>(ord / d)).is_one()) ord /= d;
  }
  if (rest > 1) {
    while (ord % rest == 0 && a.pow(static_cast<std::int64_t>(ord / rest)).is_one()) ord /= rest;
  }
  return ord;
}

Scalar primitive_element(const FieldPtr& f) {
  if (!f->is_finite()) fail(errc::infinite_field, "primitive element of an infinite field");
  u64 q = f->order();
  for (u64 idx = 1; idx < q; ++idx) {
    Scalar c = Scalar::from_index(f, idx);
    if (multiplicative_order(c) == q - 1) return c;
  }
  fail(errc::field_too_small, "no primitive element found");
}

}  // namespace tame
