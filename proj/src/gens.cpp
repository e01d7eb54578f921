#include "tame/gens.hpp"

#include "tame/error.hpp"

namespace tame {
namespace gens {

namespace {

void require_odd_prime_char(std::uint64_t p) {
  if (p == 2) fail(errc::characteristic_two, "good/bad analysis needs odd characteristic");
  if (p < 3 || p % 2 == 0) fail(errc::invalid_argument, "characteristic must be an odd prime");
}

Polynomial monomial_poly(const FieldPtr& f, const Monomial& m) {
  return Polynomial::monomial(Scalar::one(f), m);
}

void require_support_within(const Monomial& m, std::uint32_t first_allowed, const char* what) {
  if (m.degree() == 0) fail(errc::constant_monomial, std::string(what) + " must be nonconstant");
  for (std::uint32_t i = 1; i < first_allowed; ++i) {
    if (m.exp(i) != 0) {
      fail(errc::bad_monomial_support,
           std::string(what) + " may only involve x" + std::to_string(first_allowed) + "..xn");
    }
  }
}

}  // namespace

MonomialClass classify_monomial(const Monomial& m, std::uint64_t p) {
  require_odd_prime_char(p);
  if (m.degree() == 0) fail(errc::constant_monomial, "cannot classify a constant monomial");
  if (m.nvars() >= 1 && m.exp(1) != 0) {
    fail(errc::involves_target, "monomial must be free of x1");
  }
  MonomialClass c;
  c.monomial = m;
  c.p = p;
  for (std::uint32_t i = 2; i <= m.nvars(); ++i) {
    std::uint32_t e = m.exp(i);
    if (e > 0 && (e + 1) % p != 0) {
      c.good = true;
      c.witness_index = i;
      c.witness_exp = e;
      return c;
    }
  }
  c.good = false;
  return c;
}

Endomorphism psi(const FieldPtr& f, std::uint32_t nvars) {
  if (nvars < 4) fail(errc::index_out_of_range, "psi requires n >= 4");
  Monomial m = Monomial::var(nvars, 2).times(Monomial::var(nvars, 3));
  return make_elementary(1, monomial_poly(f, m));
}

Endomorphism psi_i(const FieldPtr& f, std::uint32_t nvars, std::uint32_t i) {
  if (nvars < 4) fail(errc::index_out_of_range, "psi_i requires n >= 4");
  if (i < 1 || i > nvars) fail(errc::index_out_of_range, "generator index out of range");
  std::uint32_t j1 = (i % nvars) + 1;
  std::uint32_t j2 = ((i + 1) % nvars) + 1;
  Monomial m = Monomial::var(nvars, j1).times(Monomial::var(nvars, j2));
  return make_elementary(i, monomial_poly(f, m));
}

Endomorphism phi_ijk(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Scalar& beta,
                     std::uint32_t nvars) {
  if (i < 1 || i > nvars || j < 1 || j > nvars) {
    fail(errc::index_out_of_range, "generator index out of range");
  }
  if (i == j) fail(errc::self_target, "phi_ijk requires j != i");
  if (k < 1) fail(errc::invalid_argument, "phi_ijk requires k >= 1");
  Polynomial p = Polynomial::monomial(beta, Monomial::var(nvars, j, static_cast<std::uint16_t>(k)));
  return make_elementary(i, p);
}

Certificate build_phi_m_word(const Scalar& b, std::uint32_t m, Axes axes, std::uint32_t nvars) {
  const FieldPtr& f = b.field();
  if (m < 1) fail(errc::invalid_argument, "power m must be >= 1");
  if (axes.x == axes.y || axes.x == axes.z || axes.y == axes.z) {
    fail(errc::axes_collision, "axes must be three distinct generators");
  }
  if (axes.x < 1 || axes.x > nvars || axes.y < 1 || axes.y > nvars || axes.z < 1 ||
      axes.z > nvars) {
    fail(errc::index_out_of_range, "axis index out of range");
  }

  GeneratorSet gens(f, nvars);
  // transvection z -> z + b*x
  gens.add("t", make_elementary(axes.z, Polynomial::monomial(b, Monomial::var(nvars, axes.x))));
  // swap of y and z
  Matrix swap = Matrix::identity(f, nvars);
  swap.set(axes.y - 1, axes.y - 1, Scalar::zero(f));
  swap.set(axes.z - 1, axes.z - 1, Scalar::zero(f));
  swap.set(axes.y - 1, axes.z - 1, Scalar::one(f));
  swap.set(axes.z - 1, axes.y - 1, Scalar::one(f));
  gens.add("s", make_linear(swap));
  // psi on these axes: z -> z + x*y
  Monomial xy = Monomial::var(nvars, axes.x).times(Monomial::var(nvars, axes.y));
  gens.add("psi", make_elementary(axes.z, monomial_poly(f, xy)));

  // w_1 = [t]; w_m = psi^-1 . s . w_{m-1} . s . psi . (s . w_{m-1} . s)^-1
  GeneratorWord word{{"t", 1}};
  for (std::uint32_t step = 2; step <= m; ++step) {
    GeneratorWord theta;
    theta.push_back({"s", 1});
    theta.insert(theta.end(), word.begin(), word.end());
    theta.push_back({"s", 1});
    GeneratorWord next{{"psi", -1}};
    next.insert(next.end(), theta.begin(), theta.end());
    next.push_back({"psi", 1});
    GeneratorWord theta_inv = inverted_word(theta);
    next.insert(next.end(), theta_inv.begin(), theta_inv.end());
    word = std::move(next);
  }

  Certificate cert;
  cert.expected = make_elementary(
      axes.z, Polynomial::monomial(b, Monomial::var(nvars, axes.x, static_cast<std::uint16_t>(m))));
  cert.gens = std::move(gens);
  cert.word = std::move(word);
  return cert;
}

Certificate good_special_composite(std::uint32_t k, const Monomial& m_prime, const FieldPtr& f,
                                   std::uint32_t nvars) {
  if (nvars < 4) fail(errc::index_out_of_range, "the composite requires n >= 4");
  if (m_prime.nvars() != nvars) fail(errc::arity_mismatch, "monomial arity mismatch");
  if (k < 1) fail(errc::invalid_argument, "power k must be >= 1");
  require_support_within(m_prime, 4, "m'");

  Polynomial x2 = Polynomial::variable(f, nvars, 2);
  Polynomial x3 = Polynomial::variable(f, nvars, 3);
  Polynomial x3k = x3.pow(k);
  Polynomial mp = monomial_poly(f, m_prime);

  GeneratorSet gens(f, nvars);
  gens.add("alpha", make_elementary(2, x3k));
  gens.add("theta", make_elementary(3, mp));
  gens.add("psi", psi(f, nvars));

  Certificate cert;
  cert.word = {{"alpha", -1}, {"theta", -1}, {"psi", 1}, {"theta", 1}, {"alpha", 1}};
  cert.expected = make_elementary(1, (x2 - x3k) * (x3 - mp));
  cert.gens = std::move(gens);
  return cert;
}

Certificate commutator_phi1(const Monomial& m_prime, const FieldPtr& f, std::uint32_t nvars) {
  if (nvars < 4) fail(errc::index_out_of_range, "the commutator requires n >= 4");
  if (m_prime.nvars() != nvars) fail(errc::arity_mismatch, "monomial arity mismatch");
  require_support_within(m_prime, 4, "m'");

  Polynomial x2 = Polynomial::variable(f, nvars, 2);
  Polynomial mp = monomial_poly(f, m_prime);

  GeneratorSet gens(f, nvars);
  gens.add("theta", make_elementary(3, mp));
  gens.add("psi", psi(f, nvars));

  Certificate cert;
  cert.word = {{"psi", -1}, {"theta", -1}, {"psi", 1}, {"theta", 1}};
  cert.expected = make_elementary(1, (x2 * mp).negated());
  cert.gens = std::move(gens);
  return cert;
}

DeltaExpansion delta_conjugation(std::uint32_t k, const Monomial& m_prime, const FieldPtr& f,
                                 std::uint32_t nvars) {
  if (nvars < 3) fail(errc::index_out_of_range, "delta requires n >= 3");
  if (m_prime.nvars() != nvars) fail(errc::arity_mismatch, "monomial arity mismatch");
  if (k < 1) fail(errc::invalid_argument, "power k must be >= 1");
  require_support_within(m_prime, 3, "m'");

  Endomorphism phi1 = make_elementary(2, monomial_poly(f, m_prime));
  Endomorphism alpha =
      make_elementary(1, Polynomial::variable(f, nvars, 2).pow(k + 1));

  DeltaExpansion out;
  out.delta = compose(phi1, compose(alpha, invert(phi1)));
  out.target_monomial =
      Monomial::var(nvars, 2, static_cast<std::uint16_t>(k)).times(m_prime);
  out.coeff_of_target = out.delta.image(1).coefficient_of(out.target_monomial);

  GeneratorSet gens(f, nvars);
  gens.add("phi1", phi1);
  gens.add("alpha", alpha);
  out.gens = std::move(gens);
  out.word = {{"phi1", 1}, {"alpha", 1}, {"phi1", -1}};
  return out;
}

BadToGood bad_to_good(const Endomorphism& phi, const Scalar& lambda,
                      std::optional<std::pair<std::uint32_t, std::uint32_t>> pivot) {
  const FieldPtr& f = phi.field();
  if (!f->is_finite()) fail(errc::infinite_field, "the bad case lives in positive characteristic");
  const std::uint64_t p = f->characteristic();
  const std::uint32_t n = phi.nvars();

  std::uint32_t moved = 0;
  Polynomial body;
  if (!elementary_parts(phi, moved, body)) {
    fail(errc::not_elementary, "input must be an elementary map");
  }
  if (moved != 1 || body.terms().size() != 1) {
    fail(errc::not_bad, "input must move x1 by a single monomial");
  }
  const Monomial m = body.terms()[0].mono;
  MonomialClass cls = classify_monomial(m, p);
  if (cls.good) fail(errc::not_bad, "monomial is good; no reduction needed");

  std::uint32_t pi = 0, pj = 0;
  if (pivot) {
    pi = pivot->first;
    pj = pivot->second;
    if (pi < 2 || pj < 2 || pi > n || pj > n || pi == pj) {
      fail(errc::index_out_of_range, "pivot indices must be distinct within 2..n");
    }
    if (m.exp(pi) == 0) fail(errc::zero_pivot_exponent, "pivot variable absent from the monomial");
  } else {
    for (std::uint32_t i = 2; i <= n; ++i) {
      if (m.exp(i) > 0) {
        pi = i;
        break;
      }
    }
    if (pi == 0) fail(errc::zero_pivot_exponent, "monomial has no positive exponent");
    pj = pi == n ? 2 : pi + 1;
  }

  Endomorphism lam = make_elementary(
      pi, Polynomial::monomial(lambda, Monomial::var(n, pj)));

  BadToGood out;
  out.pivot = {pi, pj};
  out.conjugated = compose(lam, compose(phi, invert(lam)));
  std::vector<std::uint16_t> exps = m.exponents();
  exps[pi - 1] -= 1;
  exps[pj - 1] += 1;
  out.good_monomial = Monomial(std::move(exps));
  out.good_coeff = out.conjugated.image(1).coefficient_of(out.good_monomial);

  GeneratorSet gens(f, n);
  gens.add("Lambda", lam);
  gens.add("phi", phi);
  out.gens = std::move(gens);
  out.word = {{"Lambda", 1}, {"phi", 1}, {"Lambda", -1}};
  return out;
}

}  // namespace gens
}  // namespace tame
