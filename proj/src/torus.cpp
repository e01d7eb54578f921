#include "tame/torus.hpp"

#include <algorithm>
#include <numeric>

#include "tame/error.hpp"
#include "tame/rng.hpp"

namespace tame {
namespace torus {

TorusPoint::TorusPoint(std::vector<Scalar> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) fail(errc::arity_mismatch, "empty torus point");
  field_ = lambdas_[0].field();
  for (const auto& l : lambdas_) {
    if (!l.field()->same_as(*field_)) fail(errc::field_mismatch, "mixed fields in torus point");
    if (l.is_zero()) fail(errc::zero_entry, "torus entries must be nonzero");
  }
}

TorusPoint TorusPoint::identity(const FieldPtr& f, std::uint32_t n) {
  return TorusPoint(std::vector<Scalar>(n, Scalar::one(f)));
}

TorusPoint TorusPoint::homothety(const FieldPtr& f, std::uint32_t n, const Scalar& ratio) {
  if (!ratio.field()->same_as(*f)) fail(errc::field_mismatch, "ratio from a different field");
  return TorusPoint(std::vector<Scalar>(n, ratio));
}

const Scalar& TorusPoint::entry(std::uint32_t i) const {
  if (i < 1 || i > nvars()) fail(errc::index_out_of_range, "torus index out of range");
  return lambdas_[i - 1];
}

TorusPoint TorusPoint::composed(const TorusPoint& o) const {
  if (nvars() != o.nvars()) fail(errc::arity_mismatch, "torus arity mismatch");
  std::vector<Scalar> out;
  out.reserve(lambdas_.size());
  for (std::size_t i = 0; i < lambdas_.size(); ++i) out.push_back(lambdas_[i] * o.lambdas_[i]);
  return TorusPoint(std::move(out));
}

TorusPoint TorusPoint::inverse() const {
  std::vector<Scalar> out;
  out.reserve(lambdas_.size());
  for (const auto& l : lambdas_) out.push_back(l.inverse());
  return TorusPoint(std::move(out));
}

Endomorphism TorusPoint::as_endomorphism() const {
  std::vector<Polynomial> images;
  images.reserve(lambdas_.size());
  for (std::uint32_t i = 1; i <= nvars(); ++i) {
    images.push_back(Polynomial::monomial(lambdas_[i - 1], Monomial::var(nvars(), i)));
  }
  return Endomorphism::from_images(std::move(images));
}

WeightVector make_weights(std::vector<std::uint32_t> weights, std::uint32_t nvars) {
  if (weights.size() + 1 != nvars) fail(errc::arity_mismatch, "weights must cover x2..xn");
  std::uint32_t sum = std::accumulate(weights.begin(), weights.end(), 0u);
  if (sum <= 1) fail(errc::invalid_argument, "weight sum must exceed 1");
  return {std::move(weights), nvars};
}

WeightVector quadratic_weights(std::uint32_t nvars) {
  std::vector<std::uint32_t> w(nvars - 1, 0);
  w[0] = 1;
  w[1] = 1;
  return make_weights(std::move(w), nvars);
}

Endomorphism conjugation_formula(const TorusPoint& alpha, const Endomorphism& phi,
                                 const TorusPoint& beta) {
  const std::uint32_t n = phi.nvars();
  if (alpha.nvars() != n || beta.nvars() != n) {
    fail(errc::arity_mismatch, "torus points must match the endomorphism arity");
  }
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    std::vector<Term> terms;
    terms.reserve(phi.image(i).terms().size());
    for (const auto& t : phi.image(i).terms()) {
      Scalar factor = beta.entry(i);
      for (std::uint32_t l = 1; l <= n; ++l) {
        std::uint16_t e = t.mono.exp(l);
        if (e) factor = factor * alpha.entry(l).pow(e);
      }
      terms.push_back({t.mono, factor * t.coeff});
    }
    images.push_back(Polynomial::from_terms(phi.field(), n, std::move(terms)));
  }
  return Endomorphism::from_images(std::move(images));
}

TorusPoint weighted_action_point(const WeightVector& w, std::span<const Scalar> lambdas) {
  if (lambdas.size() + 1 != w.nvars) fail(errc::arity_mismatch, "need lambda_2..lambda_n");
  for (const auto& l : lambdas) {
    if (l.is_zero()) fail(errc::zero_entry, "action parameters must be nonzero");
  }
  const FieldPtr& f = lambdas[0].field();
  Scalar head = Scalar::one(f);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (w.weights[i]) head = head * lambdas[i].pow(w.weights[i]);
  }
  std::vector<Scalar> entries;
  entries.reserve(w.nvars);
  entries.push_back(std::move(head));
  for (const auto& l : lambdas) entries.push_back(l);
  return TorusPoint(std::move(entries));
}

namespace {

Monomial weight_monomial(const WeightVector& w) {
  std::vector<std::uint16_t> exps(w.nvars, 0);
  for (std::size_t i = 0; i < w.weights.size(); ++i) {
    exps[i + 1] = static_cast<std::uint16_t>(w.weights[i]);
  }
  return Monomial(std::move(exps));
}

}  // namespace

bool in_commutant_form(const Endomorphism& phi, const WeightVector& w) {
  const std::uint32_t n = phi.nvars();
  if (w.nvars != n) fail(errc::arity_mismatch, "weights must match the endomorphism arity");
  const Monomial target = weight_monomial(w);
  // x_1 image: a_1 x_1 plus at most one extra term on the weight monomial
  const Monomial x1 = Monomial::var(n, 1);
  Scalar a1 = phi.image(1).coefficient_of(x1);
  if (a1.is_zero()) return false;
  for (const auto& t : phi.image(1).terms()) {
    if (!(t.mono == x1) && !(t.mono == target)) return false;
  }
  for (std::uint32_t j = 2; j <= n; ++j) {
    const auto& terms = phi.image(j).terms();
    if (terms.size() != 1 || !(terms[0].mono == Monomial::var(n, j)) || terms[0].coeff.is_zero()) {
      return false;
    }
  }
  return true;
}

bool commutes_with_action(const Endomorphism& phi, const WeightVector& w, std::uint32_t samples) {
  const FieldPtr& f = phi.field();
  const std::uint32_t n = phi.nvars();
  if (w.nvars != n) fail(errc::arity_mismatch, "weights must match the endomorphism arity");
  std::uint32_t required =
      std::max({8u, static_cast<std::uint32_t>(std::max(phi.degree(), 0) + 2), samples});
  Scalar base = Scalar::zero(f);
  std::uint64_t exponent_range = 0;
  if (f->is_finite()) {
    std::uint64_t q = f->order();
    if (q - 1 < required) {
      fail(errc::field_too_small, "need " + std::to_string(required) +
                                      " distinct nonzero values, field has " +
                                      std::to_string(q - 1));
    }
    base = primitive_element(f);
    exponent_range = q - 1;
  } else {
    base = Scalar::from_int(f, 2);  // infinite order over the rationals
    exponent_range = required;
  }
  DetRng rng(0x746f7275u ^ (static_cast<std::uint64_t>(n) << 32) ^ required);
  for (std::uint32_t s = 0; s < required; ++s) {
    std::vector<Scalar> lambdas;
    lambdas.reserve(n - 1);
    for (std::uint32_t l = 0; l + 1 < n; ++l) {
      lambdas.push_back(base.pow(static_cast<std::int64_t>(rng.below(exponent_range))));
    }
    TorusPoint point = weighted_action_point(w, lambdas);
    if (conjugation_formula(point, phi, point.inverse()) != phi) return false;
  }
  return true;
}

namespace {

// inverse within the commutant of the quadratic action
Endomorphism commutant_inverse(const Endomorphism& phi) {
  const std::uint32_t n = phi.nvars();
  const Monomial q = Monomial::var(n, 2).times(Monomial::var(n, 3));
  Scalar a1 = phi.image(1).coefficient_of(Monomial::var(n, 1));
  Scalar beta = phi.image(1).coefficient_of(q);
  Scalar a2 = phi.image(2).coefficient_of(Monomial::var(n, 2));
  Scalar a3 = phi.image(3).coefficient_of(Monomial::var(n, 3));
  std::vector<Polynomial> images;
  Scalar beta_inv = beta.negated() / (a1 * a2 * a3);
  Polynomial first =
      Polynomial::monomial(a1.inverse(), Monomial::var(n, 1)) + Polynomial::monomial(beta_inv, q);
  images.push_back(std::move(first));
  for (std::uint32_t j = 2; j <= n; ++j) {
    Scalar aj = phi.image(j).coefficient_of(Monomial::var(n, j));
    images.push_back(Polynomial::monomial(aj.inverse(), Monomial::var(n, j)));
  }
  return Endomorphism::from_images(std::move(images));
}

}  // namespace

CommutatorShape commutator_shape_check(const Endomorphism& f, const Endomorphism& g) {
  const std::uint32_t n = f.nvars();
  WeightVector w = quadratic_weights(n);
  if (!in_commutant_form(f, w) || !in_commutant_form(g, w)) {
    fail(errc::not_in_commutant, "both inputs must lie in the quadratic commutant");
  }
  Endomorphism finv = commutant_inverse(f);
  Endomorphism ginv = commutant_inverse(g);
  CommutatorShape out;
  out.commutator = compose(compose(compose(finv, ginv), f), g);
  const Monomial q = Monomial::var(n, 2).times(Monomial::var(n, 3));
  out.beta = out.commutator.image(1).coefficient_of(q);
  out.in_shape = out.commutator == make_elementary(1, Polynomial::monomial(out.beta, q));
  return out;
}

TorusPoint torus_rescale_conjugacy(const Scalar& beta, const Monomial& m) {
  if (beta.is_zero()) fail(errc::zero_beta, "rescale target must be nonzero");
  const FieldPtr& f = beta.field();
  const std::uint32_t n = m.nvars();
  if (m.degree() == 0) fail(errc::constant_monomial, "rescale needs a nonconstant monomial");
  if (m.exp(1) != 0) fail(errc::involves_target, "monomial must be free of x1");

  std::vector<Scalar> entries(n, Scalar::one(f));
  if (beta.is_one()) return TorusPoint(std::move(entries));

  // single-coordinate rescale when some exponent is 1
  for (std::uint32_t l = 2; l <= n; ++l) {
    if (m.exp(l) == 1) {
      entries[l - 1] = beta;
      return TorusPoint(std::move(entries));
    }
  }

  if (!f->is_finite()) {
    fail(errc::no_solution, "general weight equation is only solved over finite fields");
  }
  // solve sum_l m_l * s_l = dlog(beta) in Z/(q-1)
  const std::uint64_t group = f->order() - 1;
  Scalar g = primitive_element(f);
  std::uint64_t target = 0;
  {
    Scalar acc = Scalar::one(f);
    bool found = false;
    for (std::uint64_t t = 0; t < group; ++t) {
      if (acc == beta) {
        target = t;
        found = true;
        break;
      }
      acc = acc * g;
    }
    if (!found) fail(errc::no_solution, "discrete log of beta not found");
  }
  // gcd ladder over the exponents present in the monomial
  const std::int64_t modulus = static_cast<std::int64_t>(group);
  auto mod_mul = [&](std::int64_t a, std::int64_t b) {
    __int128 v = static_cast<__int128>(a) * b % modulus;
    if (v < 0) v += modulus;
    return static_cast<std::int64_t>(v);
  };
  std::int64_t d = modulus;
  std::vector<std::int64_t> combo(n, 0);  // s_l achieving the current gcd
  for (std::uint32_t l = 2; l <= n; ++l) {
    std::int64_t e = m.exp(l);
    if (e == 0) continue;
    // extended gcd of (d, e): old_s * d + old_x * e = gcd
    std::int64_t old_r = d, r = e, old_x = 0, x = 1, old_s = 1, s = 0;
    while (r != 0) {
      std::int64_t qq = old_r / r;
      std::int64_t t1 = old_r - qq * r;
      old_r = r;
      r = t1;
      std::int64_t t2 = old_s - qq * s;
      old_s = s;
      s = t2;
      std::int64_t t3 = old_x - qq * x;
      old_x = x;
      x = t3;
    }
    for (auto& c : combo) c = mod_mul(c, old_s);
    combo[l - 1] = (combo[l - 1] + old_x % modulus + modulus) % modulus;
    d = old_r;
  }
  if (d == 0 || target % static_cast<std::uint64_t>(d) != 0) {
    fail(errc::no_solution, "beta is not reachable by rescaling this monomial");
  }
  std::int64_t scale = static_cast<std::int64_t>(target) / d;
  for (std::uint32_t l = 2; l <= n; ++l) {
    entries[l - 1] = g.pow(mod_mul(combo[l - 1], scale));
  }
  return TorusPoint(std::move(entries));
}

bool linearity_via_homothety(const Endomorphism& phi) {
  const FieldPtr& f = phi.field();
  if (!f->is_finite()) fail(errc::infinite_field, "homothety probe requires a finite field");
  const std::uint64_t q = f->order();
  int deg = phi.degree();
  if (static_cast<std::int64_t>(q - 1) <= deg) {
    fail(errc::field_too_small, "need an element of multiplicative order exceeding deg(phi)");
  }
  TorusPoint h = TorusPoint::homothety(f, phi.nvars(), primitive_element(f));
  return conjugation_formula(h, phi, h.inverse()) == phi;
}

}  // namespace torus
}  // namespace tame
