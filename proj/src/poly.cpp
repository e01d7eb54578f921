#include "tame/poly.hpp"

#include <algorithm>
#include <atomic>
#include <map>

#include "tame/error.hpp"

namespace tame {

namespace {
std::atomic<std::uint32_t> g_degree_cap{64};

struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp_grlex(a, b) > 0;
  }
};
}  // namespace

void set_degree_cap(std::uint32_t cap) {
  if (cap == 0) fail(errc::invalid_argument, "degree cap must be positive");
  g_degree_cap.store(cap, std::memory_order_relaxed);
}

std::uint32_t degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }

Monomial Monomial::var(std::uint32_t nvars, std::uint32_t i, std::uint16_t e) {
  if (i < 1 || i > nvars) fail(errc::index_out_of_range, "variable index out of range");
  std::vector<std::uint16_t> exps(nvars, 0);
  exps[i - 1] = e;
  return Monomial(std::move(exps));
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto e : e_) d += e;
  return d;
}

std::uint16_t Monomial::exp(std::uint32_t i) const {
  if (i < 1 || i > nvars()) fail(errc::index_out_of_range, "variable index out of range");
  return e_[i - 1];
}

Monomial Monomial::times(const Monomial& o) const {
  if (nvars() != o.nvars()) fail(errc::arity_mismatch, "monomial arity mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    std::uint32_t s = static_cast<std::uint32_t>(r.e_[i]) + o.e_[i];
    if (s > 0xffff) fail(errc::exponent_overflow, "exponent exceeds 16-bit storage");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial Monomial::pow(std::uint32_t e) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(e_[i]) * e;
    if (s > 0xffff) fail(errc::exponent_overflow, "exponent exceeds 16-bit storage");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

int Monomial::cmp_grlex(const Monomial& a, const Monomial& b) {
  std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
  }
  return 0;
}

std::string Monomial::str() const {
  std::string s;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
  }
  return s.empty() ? "1" : s;
}

// --- Polynomial ---

void Polynomial::require_compatible(const Polynomial& o) const {
  if (nvars_ != o.nvars_) fail(errc::arity_mismatch, "polynomial arity mismatch");
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    fail(errc::field_mismatch, "polynomials over different fields");
  }
}

void Polynomial::check_cap() const {
  if (!terms_.empty() && terms_.front().mono.degree() > degree_cap()) {
    fail(errc::degree_cap_exceeded,
         "total degree " + std::to_string(terms_.front().mono.degree()) + " exceeds cap " +
             std::to_string(degree_cap()));
  }
}

Polynomial Polynomial::zero(const FieldPtr& f, std::uint32_t nvars) {
  Polynomial p;
  p.field_ = f;
  p.nvars_ = nvars;
  return p;
}

Polynomial Polynomial::constant(const Scalar& c, std::uint32_t nvars) {
  Polynomial p = zero(c.field(), nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial::unit(nvars), c});
  return p;
}

Polynomial Polynomial::variable(const FieldPtr& f, std::uint32_t nvars, std::uint32_t i) {
  Polynomial p = zero(f, nvars);
  p.terms_.push_back({Monomial::var(nvars, i), Scalar::one(f)});
  return p;
}

Polynomial Polynomial::monomial(const Scalar& c, Monomial m) {
  Polynomial p = zero(c.field(), m.nvars());
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  p.check_cap();
  return p;
}

Polynomial Polynomial::from_terms(const FieldPtr& f, std::uint32_t nvars,
                                  std::vector<Term> terms) {
  std::map<Monomial, Scalar, GrlexDesc> acc;
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars) fail(errc::arity_mismatch, "term arity mismatch");
    auto it = acc.find(t.mono);
    if (it == acc.end()) {
      acc.emplace(std::move(t.mono), std::move(t.coeff));
    } else {
      it->second = it->second + t.coeff;
    }
  }
  Polynomial p = zero(f, nvars);
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) p.terms_.push_back({m, c});
  }
  p.check_cap();
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r = zero(field_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = Monomial::cmp_grlex(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.negated(); }

Polynomial Polynomial::negated() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff.negated();
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return zero(field_, nvars_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = t.coeff * c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_compatible(o);
  const std::uint32_t cap = degree_cap();
  std::map<Monomial, Scalar, GrlexDesc> acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      if (a.mono.degree() + b.mono.degree() > cap) {
        fail(errc::degree_cap_exceeded, "product degree exceeds cap " + std::to_string(cap));
      }
      Monomial m = a.mono.times(b.mono);
      Scalar c = a.coeff * b.coeff;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = it->second + c;
      }
    }
  }
  Polynomial r = zero(field_, nvars_);
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) r.terms_.push_back({m, c});
  }
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial acc = constant(Scalar::one(field_), nvars_);
  Polynomial base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_) fail(errc::arity_mismatch, "image count must equal nvars");
  for (const auto& img : images) {
    if (img.nvars() != images[0].nvars()) fail(errc::arity_mismatch, "inconsistent image arity");
    if (!img.field()->same_as(*field_)) fail(errc::field_mismatch, "image over a different field");
  }
  const std::uint32_t out_nvars = images.empty() ? nvars_ : images[0].nvars();
  // memoized powers of each image, indexed by exponent
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power_of = [&](std::uint32_t var, std::uint16_t e) -> const Polynomial& {
    auto& memo = powers[var];
    if (memo.empty()) memo.push_back(Polynomial::constant(Scalar::one(field_), out_nvars));
    while (memo.size() <= e) memo.push_back(memo.back() * images[var]);
    return memo[e];
  };
  Polynomial acc = zero(field_, out_nvars);
  for (const auto& t : terms_) {
    Polynomial prod = constant(t.coeff, out_nvars);
    for (std::uint32_t v = 0; v < nvars_; ++v) {
      std::uint16_t e = t.mono.exponents()[v];
      if (e) prod = prod * power_of(v, e);
    }
    acc = acc + prod;
  }
  return acc;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

bool Polynomial::is_linear() const {
  if (terms_.empty()) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.mono.degree() == 1; });
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_unit()) return terms_.back().coeff;
  return Scalar::zero(field_);
}

Scalar Polynomial::coefficient_of(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return Scalar::zero(field_);
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> s;
  s.reserve(terms_.size());
  for (const auto& t : terms_) s.push_back(t.mono);
  return s;
}

bool Polynomial::independent_of(std::uint32_t i) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.exp(i) == 0; });
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += t.coeff.str();
    if (!t.mono.is_unit()) s += "*" + t.mono.str();
  }
  return s;
}

}  // namespace tame
