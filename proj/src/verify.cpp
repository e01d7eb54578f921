#include "tame/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tame/error.hpp"
#include "tame/gens.hpp"
#include "tame/io.hpp"
#include "tame/lingrp.hpp"
#include "tame/poly.hpp"
#include "tame/rng.hpp"
#include "tame/torus.hpp"

#include "json.hpp"

namespace tame {
namespace verify {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

DetRng check_rng(std::string_view id, const FieldPtr& f, std::uint64_t seed) {
  std::uint64_t salt = fnv1a(id) ^ (f->is_finite() ? f->order() : 0x5151515151ull);
  return DetRng(seed).fork(salt);
}

// --- deterministic random objects ---

Scalar random_scalar(DetRng& rng, const FieldPtr& f) {
  if (f->is_finite()) return Scalar::from_index(f, rng.below(f->order()));
  return Scalar::from_int(f, rng.range(-9, 9));
}

Scalar random_nonzero(DetRng& rng, const FieldPtr& f) {
  for (;;) {
    Scalar s = random_scalar(rng, f);
    if (!s.is_zero()) return s;
  }
}

Monomial random_monomial(DetRng& rng, std::uint32_t nvars, std::uint32_t max_deg,
                         std::uint32_t first_var = 1) {
  std::vector<std::uint16_t> exps(nvars, 0);
  std::uint32_t budget = 1 + static_cast<std::uint32_t>(rng.below(max_deg));
  for (std::uint32_t d = 0; d < budget; ++d) {
    std::uint32_t v = first_var - 1 + static_cast<std::uint32_t>(rng.below(nvars - first_var + 1));
    exps[v] += 1;
  }
  return Monomial(std::move(exps));
}

Polynomial random_poly(DetRng& rng, const FieldPtr& f, std::uint32_t nvars, std::uint32_t max_deg,
                       std::uint32_t max_terms) {
  std::vector<Term> terms;
  std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.below(max_terms));
  for (std::uint32_t t = 0; t < count; ++t) {
    terms.push_back({random_monomial(rng, nvars, max_deg), random_scalar(rng, f)});
  }
  return Polynomial::from_terms(f, nvars, std::move(terms));
}

Endomorphism random_endo(DetRng& rng, const FieldPtr& f, std::uint32_t nvars,
                         std::uint32_t max_deg) {
  std::vector<Polynomial> images;
  for (std::uint32_t i = 0; i < nvars; ++i) {
    images.push_back(random_poly(rng, f, nvars, max_deg, 4));
  }
  return Endomorphism::from_images(std::move(images));
}

torus::TorusPoint random_torus_point(DetRng& rng, const FieldPtr& f, std::uint32_t n) {
  std::vector<Scalar> entries;
  for (std::uint32_t i = 0; i < n; ++i) entries.push_back(random_nonzero(rng, f));
  return torus::TorusPoint(std::move(entries));
}

Matrix random_invertible(DetRng& rng, const FieldPtr& f, std::uint32_t n) {
  for (;;) {
    std::vector<Scalar> entries;
    for (std::uint32_t i = 0; i < n * n; ++i) entries.push_back(random_scalar(rng, f));
    Matrix m = Matrix::from_entries(f, n, std::move(entries));
    if (m.is_invertible()) return m;
  }
}

/// Commutant member for the quadratic action: scaled generators plus one
/// multiple of x2*x3 on the first image.
Endomorphism random_commutant_member(DetRng& rng, const FieldPtr& f, std::uint32_t n) {
  std::vector<Polynomial> images;
  Monomial q = Monomial::var(n, 2).times(Monomial::var(n, 3));
  Polynomial first = Polynomial::monomial(random_nonzero(rng, f), Monomial::var(n, 1)) +
                     Polynomial::monomial(random_scalar(rng, f), q);
  images.push_back(std::move(first));
  for (std::uint32_t j = 2; j <= n; ++j) {
    images.push_back(Polynomial::monomial(random_nonzero(rng, f), Monomial::var(n, j)));
  }
  return Endomorphism::from_images(std::move(images));
}

FieldPtr quadratic_extension(std::uint64_t p) {
  for (std::uint64_t c = 1; c < p; ++c) {
    try {
      return make_field(p, 2, {c, 0, 1});
    } catch (const error&) {
    }
    try {
      return make_field(p, 2, {c, 1, 1});
    } catch (const error&) {
    }
  }
  fail(errc::no_solution, "no irreducible quadratic found");
}

struct Checker {
  CheckResult result;

  Checker(std::string id, const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
          std::uint32_t samples) {
    result.id = std::move(id);
    result.field = f->describe();
    result.nvars = nvars;
    result.seed = seed;
    result.samples = samples;
    result.pass = true;
  }

  void require(bool ok, const std::string& witness) {
    if (!ok && result.pass) {
      result.pass = false;
      result.counterexample = witness;
    }
  }

  CheckResult done(std::string detail) {
    result.detail = std::move(detail);
    return result;
  }
};

}  // namespace

CheckResult check_torus_conjugation(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                    std::uint32_t samples, ComposeFn composer) {
  Checker ck("torus-conjugation-formula", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  if (!composer) {
    composer = [](const Endomorphism& a, const Endomorphism& b) { return compose(a, b); };
  }
  for (std::uint32_t s = 0; s < samples && ck.result.pass; ++s) {
    torus::TorusPoint alpha = random_torus_point(rng, f, nvars);
    torus::TorusPoint beta = random_torus_point(rng, f, nvars);
    Endomorphism phi = random_endo(rng, f, nvars, 4);
    Endomorphism via_formula = torus::conjugation_formula(alpha, phi, beta);
    Endomorphism via_compose =
        composer(composer(alpha.as_endomorphism(), phi), beta.as_endomorphism());
    ck.require(via_formula == via_compose,
               "phi = " + phi.canonical_key() + " formula " + via_formula.canonical_key() +
                   " vs composition " + via_compose.canonical_key());
  }
  return ck.done("closed-form diagonal conjugation vs composition");
}

namespace {

CheckResult check_homothety_linearity(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                      std::uint32_t samples) {
  Checker ck("homothety-linearity", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  Endomorphism psi = gens::psi(f, nvars);
  const std::uint64_t q = f->order();
  FieldPtr big = f;
  if (q - 1 <= 2) {
    // the probe cannot see past linear maps here; that must surface as an error
    bool threw = false;
    try {
      torus::linearity_via_homothety(psi);
    } catch (const error& e) {
      threw = e.code() == errc::field_too_small;
    }
    ck.require(threw, "expected field_too_small for a quadratic map over " + f->describe());
    big = quadratic_extension(f->characteristic());
  }
  for (std::uint32_t s = 0; s < samples && ck.result.pass; ++s) {
    Matrix m = random_invertible(rng, big, nvars);
    ck.require(torus::linearity_via_homothety(make_linear(m)),
               "linear map reported nonlinear: " + m.str());
  }
  Endomorphism psi_big = gens::psi(big, nvars);
  ck.require(!torus::linearity_via_homothety(psi_big),
             "quadratic map reported linear over " + big->describe());
  for (std::uint32_t s = 0; s < samples / 4 && ck.result.pass; ++s) {
    std::uint32_t deg = 2 + static_cast<std::uint32_t>(rng.below(3));
    if (big->order() - 1 <= deg) continue;
    Endomorphism e = make_elementary(1, Polynomial::monomial(Scalar::one(big),
                                                             random_monomial(rng, nvars, deg, 2)));
    if (e.degree() < 2) continue;
    ck.require(!torus::linearity_via_homothety(e),
               "nonlinear elementary reported linear: " + e.canonical_key());
  }
  return ck.done("commuting with a high-order homothety separates linear maps");
}

CheckResult check_weighted_commutant(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                     std::uint32_t samples) {
  Checker ck("weighted-commutant", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  torus::WeightVector qw = torus::quadratic_weights(nvars);

  // membership is exact under the closed conjugation law
  for (std::uint32_t s = 0; s < samples && ck.result.pass; ++s) {
    Endomorphism member = random_commutant_member(rng, f, nvars);
    ck.require(torus::in_commutant_form(member, qw),
               "constructed member rejected: " + member.canonical_key());
    torus::TorusPoint point = torus::weighted_action_point(
        qw, std::vector<Scalar>(nvars - 1, random_nonzero(rng, f)));
    ck.require(torus::conjugation_formula(point, member, point.inverse()) == member,
               "member moved by the action: " + member.canonical_key());
  }

  // sampling gate: primes up to 7 are too small and must say so
  if (f->order() - 1 < 8) {
    bool threw = false;
    try {
      torus::commutes_with_action(gens::psi(f, nvars), qw, 8);
    } catch (const error& e) {
      threw = e.code() == errc::field_too_small;
    }
    ck.require(threw, "expected field_too_small from sampling over " + f->describe());
  }

  FieldPtr big = f->order() - 1 >= 8 ? f : quadratic_extension(f->characteristic());
  ck.require(torus::commutes_with_action(gens::psi(big, nvars), qw, 8),
             "psi failed commutation sampling over " + big->describe());
  // structured non-members: one stray factor gives a nontrivial character
  Monomial stray = Monomial::var(nvars, 2, 2);
  Endomorphism bad1 = make_elementary(1, Polynomial::monomial(Scalar::one(big), stray));
  ck.require(!torus::in_commutant_form(bad1, qw), "x2^2 map accepted as commutant form");
  ck.require(!torus::commutes_with_action(bad1, qw, 8),
             "x2^2 map passed commutation sampling");
  for (std::uint32_t s = 0; s < samples / 4 && ck.result.pass; ++s) {
    // off-diagonal corruption on one of the scaled generators
    std::uint32_t j = 2 + static_cast<std::uint32_t>(rng.below(nvars - 1));
    std::uint32_t l = 2 + static_cast<std::uint32_t>(rng.below(nvars - 1));
    if (l == j) l = l == nvars ? 2 : l + 1;
    Endomorphism bad = random_commutant_member(rng, big, nvars);
    std::vector<Polynomial> images = bad.images();
    images[j - 1] = images[j - 1] + Polynomial::monomial(Scalar::one(big), Monomial::var(nvars, l));
    Endomorphism corrupted = Endomorphism::from_images(std::move(images));
    ck.require(!torus::in_commutant_form(corrupted, qw),
               "corrupted map accepted: " + corrupted.canonical_key());
    ck.require(!torus::commutes_with_action(corrupted, qw, 8),
               "corrupted map passed sampling: " + corrupted.canonical_key());
  }

  // general weights: the weighted point scales x1 by the stated monomial
  for (std::uint32_t s = 0; s < samples / 4 && ck.result.pass; ++s) {
    std::vector<std::uint32_t> weights(nvars - 1, 0);
    do {
      for (auto& w : weights) w = static_cast<std::uint32_t>(rng.below(4));
    } while (std::accumulate(weights.begin(), weights.end(), 0u) <= 1);
    torus::WeightVector wv = torus::make_weights(weights, nvars);
    std::vector<Scalar> lambdas;
    for (std::uint32_t i = 0; i + 1 < nvars; ++i) lambdas.push_back(random_nonzero(rng, f));
    torus::TorusPoint pt = torus::weighted_action_point(wv, lambdas);
    Scalar expect = Scalar::one(f);
    for (std::size_t i = 0; i < lambdas.size(); ++i) expect = expect * lambdas[i].pow(weights[i]);
    ck.require(pt.entry(1) == expect, "weighted x1 scale mismatch");
    for (std::uint32_t j = 2; j <= nvars; ++j) {
      ck.require(pt.entry(j) == lambdas[j - 2], "weighted x_j scale mismatch");
    }
  }
  return ck.done("commutant shape, action points, and sampling gate");
}

CheckResult check_commutator_shape(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                   std::uint32_t samples) {
  Checker ck("commutant-commutator-shape", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  for (std::uint32_t s = 0; s < samples && ck.result.pass; ++s) {
    Endomorphism a = random_commutant_member(rng, f, nvars);
    Endomorphism b = random_commutant_member(rng, f, nvars);
    torus::CommutatorShape shape = torus::commutator_shape_check(a, b);
    ck.require(shape.in_shape, "commutator escaped the quadratic line: " +
                                   shape.commutator.canonical_key());
  }
  torus::CommutatorShape trivial = torus::commutator_shape_check(
      random_commutant_member(rng, f, nvars), Endomorphism::identity(f, nvars));
  ck.require(trivial.in_shape && trivial.beta.is_zero(), "identity commutator not trivial");
  return ck.done("commutators of commutant pairs stay on x1 -> x1 + beta x2 x3");
}

CheckResult check_rescale_conjugacy(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                    std::uint32_t samples) {
  Checker ck("torus-rescale-conjugacy", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  Monomial q = Monomial::var(nvars, 2).times(Monomial::var(nvars, 3));
  for (std::uint32_t s = 0; s < samples && ck.result.pass; ++s) {
    Scalar beta = random_nonzero(rng, f);
    torus::TorusPoint lam = torus::torus_rescale_conjugacy(beta, q);
    ck.require(lam.entry(2) == beta && lam.entry(1).is_one(),
               "quadratic rescale should act on x2 alone");
    Endomorphism base = make_elementary(1, Polynomial::monomial(Scalar::one(f), q));
    Endomorphism want = make_elementary(1, Polynomial::monomial(beta, q));
    ck.require(torus::conjugation_formula(lam, base, lam.inverse()) == want,
               "rescale conjugation failed for beta = " + beta.str());
  }
  for (std::uint32_t s = 0; s < samples / 2 && ck.result.pass; ++s) {
    Monomial m = random_monomial(rng, nvars, 4, 2);
    Scalar beta = random_nonzero(rng, f);
    torus::TorusPoint lam;
    try {
      lam = torus::torus_rescale_conjugacy(beta, m);
    } catch (const error& e) {
      if (e.code() == errc::no_solution) continue;  // reported, not a failure
      throw;
    }
    Endomorphism base = make_elementary(1, Polynomial::monomial(Scalar::one(f), m));
    Endomorphism want = make_elementary(1, Polynomial::monomial(beta, m));
    ck.require(torus::conjugation_formula(lam, base, lam.inverse()) == want,
               "general rescale failed for " + m.str() + ", beta = " + beta.str());
  }
  return ck.done("rescaling torus points hit the requested coefficient");
}

CheckResult check_homothety_scaling(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                    std::uint32_t samples) {
  Checker ck("homothety-degree-scaling", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  for (std::uint32_t s = 0; s < samples && ck.result.pass; ++s) {
    Scalar h = random_nonzero(rng, f);
    Endomorphism phi = random_endo(rng, f, nvars, 4);
    torus::TorusPoint hom = torus::TorusPoint::homothety(f, nvars, h);
    Endomorphism conj = torus::conjugation_formula(hom, phi, hom.inverse());
    for (std::uint32_t i = 1; i <= nvars && ck.result.pass; ++i) {
      for (const auto& t : phi.image(i).terms()) {
        Scalar want = t.coeff * h.pow(static_cast<std::int64_t>(t.mono.degree()) - 1);
        ck.require(conj.image(i).coefficient_of(t.mono) == want,
                   "degree-" + std::to_string(t.mono.degree()) + " coefficient scaled wrong");
      }
    }
  }
  // the stabilizing ratio: conjugating x1 -> x1 + a x2 x3 by h = a^-1 gives back psi
  Monomial q = Monomial::var(nvars, 2).times(Monomial::var(nvars, 3));
  for (std::uint32_t s = 0; s < samples / 2 && ck.result.pass; ++s) {
    Scalar a = random_nonzero(rng, f);
    Endomorphism scaled_psi = make_elementary(1, Polynomial::monomial(a, q));
    torus::TorusPoint hom = torus::TorusPoint::homothety(f, nvars, a.inverse());
    ck.require(torus::conjugation_formula(hom, scaled_psi, hom.inverse()) == gens::psi(f, nvars),
               "homothety a^-1 failed to restore psi for a = " + a.str());
  }
  return ck.done("conjugation by h multiplies degree-d terms by h^(d-1)");
}

CheckResult check_power_words(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                              std::uint32_t samples) {
  Checker ck("power-transvection-words", f, nvars, seed, samples);
  std::vector<Scalar> bs{Scalar::one(f), primitive_element(f)};
  for (std::uint32_t m = 1; m <= 10 && ck.result.pass; ++m) {
    for (const auto& b : bs) {
      gens::Certificate cert = gens::build_phi_m_word(b, m, {}, nvars);
      Endomorphism got = eval_word(cert.word, cert.gens);
      ck.require(got == cert.expected, "m = " + std::to_string(m) + ", b = " + b.str() +
                                           ": word evaluates to " + got.canonical_key());
      if (!ck.result.pass) break;
    }
  }
  return ck.done("word recursion produces z -> z + b x^m for m <= 10");
}

CheckResult check_cyclic_and_powers(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                    std::uint32_t samples) {
  Checker ck("cyclic-psi-and-powers", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  for (std::uint32_t i = 1; i <= nvars && ck.result.pass; ++i) {
    Endomorphism got = gens::psi_i(f, nvars, i);
    std::uint32_t j1 = (i % nvars) + 1, j2 = ((i + 1) % nvars) + 1;
    Endomorphism want = make_elementary(
        i, Polynomial::monomial(Scalar::one(f), Monomial::var(nvars, j1).times(Monomial::var(nvars, j2))));
    ck.require(got == want, "psi_" + std::to_string(i) + " wrapped incorrectly");
  }
  for (std::uint32_t s = 0; s < samples / 2 && ck.result.pass; ++s) {
    std::uint32_t i = 1 + static_cast<std::uint32_t>(rng.below(nvars));
    std::uint32_t j = 1 + static_cast<std::uint32_t>(rng.below(nvars));
    if (j == i) j = j == nvars ? 1 : j + 1;
    std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(6));
    Scalar beta = random_nonzero(rng, f);
    Endomorphism direct = gens::phi_ijk(i, j, k, beta, nvars);
    std::uint32_t aux = 1;
    while (aux == i || aux == j) ++aux;
    gens::Certificate cert = gens::build_phi_m_word(beta, k, {j, aux, i}, nvars);
    ck.require(eval_word(cert.word, cert.gens) == direct,
               "power word missed phi_" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k));
  }
  return ck.done("cyclic psi_i labelling and single-power generators");
}

Monomial random_tail_monomial(DetRng& rng, std::uint32_t nvars, std::uint32_t max_deg) {
  // nonconstant, supported on x4..x6 only
  std::uint32_t hi = std::min(nvars, 6u);
  std::vector<std::uint16_t> exps(nvars, 0);
  std::uint32_t budget = 1 + static_cast<std::uint32_t>(rng.below(max_deg));
  for (std::uint32_t d = 0; d < budget; ++d) {
    exps[3 + rng.below(hi - 3)] += 1;
  }
  return Monomial(std::move(exps));
}

CheckResult check_good_composite(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                 std::uint32_t samples) {
  Checker ck("good-composite", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  for (std::uint32_t s = 0; s < samples && ck.result.pass; ++s) {
    std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(6));
    Monomial mp = random_tail_monomial(rng, nvars, 4);
    gens::Certificate cert = gens::good_special_composite(k, mp, f, nvars);
    // closed form rebuilt here, independent of the construction
    Polynomial x2 = Polynomial::variable(f, nvars, 2);
    Polynomial x3 = Polynomial::variable(f, nvars, 3);
    Polynomial mpp = Polynomial::monomial(Scalar::one(f), mp);
    Polynomial body = x2 * x3 + x3.pow(k) * mpp - x3.pow(k + 1) - x2 * mpp;
    ck.require(cert.expected == make_elementary(1, body),
               "closed form drifted for k = " + std::to_string(k) + ", m' = " + mp.str());
    Endomorphism got = eval_word(cert.word, cert.gens);
    ck.require(got == cert.expected,
               "composite word k = " + std::to_string(k) + ", m' = " + mp.str() +
                   " evaluates to " + got.canonical_key());
    ck.require(got.image(2) == Polynomial::variable(f, nvars, 2),
               "x2 failed to return to itself");
  }
  return ck.done("five-letter composite hits x1 + (x2 - x3^k)(x3 - m')");
}

CheckResult check_good_commutator(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                  std::uint32_t samples) {
  Checker ck("good-commutator", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  for (std::uint32_t s = 0; s < samples && ck.result.pass; ++s) {
    Monomial mp = random_tail_monomial(rng, nvars, 4);
    gens::Certificate cert = gens::commutator_phi1(mp, f, nvars);
    Polynomial want = (Polynomial::variable(f, nvars, 2) *
                       Polynomial::monomial(Scalar::one(f), mp)).negated();
    ck.require(cert.expected == make_elementary(1, want), "commutator closed form drifted");
    ck.require(eval_word(cert.word, cert.gens) == cert.expected,
               "commutator word failed for m' = " + mp.str());
  }
  return ck.done("psi/theta commutator equals x1 -> x1 - x2 m'");
}

CheckResult check_delta_coefficient(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                    std::uint32_t samples) {
  Checker ck("delta-coefficient", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  const std::uint64_t p = f->characteristic();
  for (std::uint32_t k = 1; k <= 2 * p && ck.result.pass; ++k) {
    Monomial mp = random_monomial(rng, nvars, 3, 3);
    gens::DeltaExpansion d = gens::delta_conjugation(k, mp, f, nvars);
    Scalar want = Scalar::from_int(f, static_cast<std::int64_t>(k + 1));
    ck.require(d.coeff_of_target == want,
               "k = " + std::to_string(k) + ": coefficient " + d.coeff_of_target.str());
    ck.require(d.coeff_of_target.is_zero() == ((k + 1) % p == 0),
               "vanishing pattern wrong at k = " + std::to_string(k));
    gens::MonomialClass cls = gens::classify_monomial(d.target_monomial, p);
    bool witness_is_x2 = cls.good && cls.witness_index == 2;
    ck.require(witness_is_x2 == !d.coeff_of_target.is_zero(),
               "classification disagrees with the expansion at k = " + std::to_string(k));
    ck.require(d.delta.image(2) == Polynomial::variable(f, nvars, 2),
               "delta moved x2");
  }
  return ck.done("binomial conjugation carries x2^k m' with coefficient k+1");
}

CheckResult check_bad_to_good(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                              std::uint32_t samples) {
  Checker ck("bad-to-good", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  const std::uint64_t p = f->characteristic();
  for (std::uint32_t s = 0; s < samples && ck.result.pass; ++s) {
    // bad monomial: positive exponents all congruent to -1 mod p
    std::vector<std::uint16_t> exps(nvars, 0);
    std::uint32_t positive = 0;
    for (std::uint32_t v = 1; v < nvars; ++v) {
      if (rng.below(2)) {
        exps[v] = static_cast<std::uint16_t>(p - 1);
        ++positive;
      }
    }
    if (positive == 0) exps[1] = static_cast<std::uint16_t>(p - 1);
    Monomial bad(std::move(exps));
    Scalar b = random_nonzero(rng, f);
    Scalar lambda = random_nonzero(rng, f);
    Endomorphism phi = make_elementary(1, Polynomial::monomial(b, bad));
    gens::BadToGood r = gens::bad_to_good(phi, lambda);
    ck.require(r.good_coeff == (lambda * b).negated(),
               "designated coefficient " + r.good_coeff.str() + " for b = " + b.str() +
                   ", lambda = " + lambda.str());
    ck.require(!r.good_coeff.is_zero(), "good coefficient vanished");
    gens::MonomialClass cls = gens::classify_monomial(r.good_monomial, p);
    ck.require(cls.good, "designated monomial is not good: " + r.good_monomial.str());
    ck.require(eval_word(r.word, r.gens) == r.conjugated, "conjugation word mismatch");
    // lambda = 0 conjugates by the identity
    gens::BadToGood untouched = gens::bad_to_good(phi, Scalar::zero(f));
    ck.require(untouched.conjugated == phi, "zero lambda moved the map");
  }
  return ck.done("triangular conjugation surfaces a good monomial with -lambda b");
}

CheckResult check_standard_closure(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                   std::uint32_t samples) {
  Checker ck("standard-form-closure", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  std::vector<FieldPtr> grounds{f, quadratic_extension(f->characteristic())};
  for (const auto& ground : grounds) {
    for (std::uint32_t n : {2u, 3u}) {
      const std::uint64_t group = ground->order() - 1;
      for (std::uint32_t s = 0; s < std::max(4u, samples / 8) && ck.result.pass; ++s) {
        StandardAuto a = make_standard_auto(rng.below(2) != 0, random_invertible(rng, ground, n),
                                            static_cast<std::uint32_t>(rng.below(ground->extension_degree())),
                                            rng.below(group));
        StandardAuto b = make_standard_auto(rng.below(2) != 0, random_invertible(rng, ground, n),
                                            static_cast<std::uint32_t>(rng.below(ground->extension_degree())),
                                            rng.below(group));
        StandardAuto ab = compose_standard(a, b);
        Matrix x = random_invertible(rng, ground, n);
        Matrix y = random_invertible(rng, ground, n);
        ck.require(apply_standard(ab, x) == apply_standard(a, apply_standard(b, x)),
                   "normal form disagrees with functional composition over " +
                       ground->describe());
        ck.require(apply_standard(a, x * y) == apply_standard(a, x) * apply_standard(a, y),
                   "standard map is not multiplicative over " + ground->describe());
      }
    }
  }
  return ck.done("composition of standard forms matches pointwise application");
}

CheckResult check_diagonal_fixing(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                  std::uint32_t samples) {
  Checker ck("diagonal-fixing", f, nvars, seed, samples);
  DetRng rng = check_rng(ck.result.id, f, seed);
  const std::uint32_t n = 3;
  const std::uint64_t q = f->order();
  const std::uint64_t cap = 2'000'000;

  // an inner map with diagonal S fixes all diagonals
  std::vector<Scalar> d;
  for (std::uint32_t i = 0; i < n; ++i) d.push_back(random_nonzero(rng, f));
  StandardAuto inner = make_standard_auto(false, Matrix::diagonal(d), 0, 0);
  DiagonalFixingReport rep = diagonal_fixing_analysis(inner, cap);
  ck.require(rep.fixes_all_diagonals, "inner diagonal map moved a diagonal");

  // the flip fixes everything over F_3 (all units are involutions) and
  // nothing bigger; the character breaks as soon as some det power is not 1
  StandardAuto flip = make_standard_auto(true, Matrix::identity(f, n), 0, 0);
  DiagonalFixingReport flip_rep = diagonal_fixing_analysis(flip, cap);
  ck.require(flip_rep.fixes_all_diagonals == (q == 3),
             "transpose-inverse fixing verdict wrong over " + f->describe());
  if (!flip_rep.fixes_all_diagonals) {
    ck.require(flip_rep.witness.has_value() &&
                   apply_standard(flip, *flip_rep.witness) != *flip_rep.witness,
               "flip witness does not actually move");
  }
  if (q > 3) {
    StandardAuto radial = make_standard_auto(false, Matrix::identity(f, n), 0, 2);
    DiagonalFixingReport rad_rep = diagonal_fixing_analysis(radial, cap);
    ck.require(!rad_rep.fixes_all_diagonals, "det^2 radial map fixed every diagonal");
  }

  // enumerate fixers among monomial conjugators and re-verify each
  SurveyReport survey = survey_diagonal_fixers(f, n, cap, ConjugatorRange::monomial);
  for (const auto& e : survey.fixers) {
    StandardAuto phi =
        make_standard_auto(e.transpose_inverse, e.conjugator, e.frobenius_exp, e.det_character_exp);
    DiagonalFixingReport check = diagonal_fixing_analysis(phi, cap);
    ck.require(check.fixes_all_diagonals, "survey listed a non-fixer");
    ck.require(e.det_character_exp == 0 && e.frobenius_exp == 0,
               "fixer with nontrivial twist or character over " + f->describe());
    ck.require(e.conjugator.is_diagonal(), "fixer with non-diagonal conjugator");
    if (q > 3) {
      ck.require(!e.transpose_inverse, "flip survived the survey over " + f->describe());
    }
  }
  std::uint64_t expected_count = (q == 3 ? 2 : 1) * (q - 1) * (q - 1) * (q - 1);
  ck.require(survey.fixers.size() == expected_count,
             "fixer count " + std::to_string(survey.fixers.size()) + ", expected " +
                 std::to_string(expected_count));
  return ck.done("diagonal-fixing analysis and monomial survey agree");
}

CheckResult check_radial_bijectivity(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                     std::uint32_t samples) {
  Checker ck("radial-bijectivity", f, nvars, seed, samples);
  const std::uint64_t q = f->order();
  for (std::uint32_t n : {2u, 3u}) {
    for (std::uint64_t c = 0; c < q - 1 && ck.result.pass; ++c) {
      // kernel scalars: the radial map is injective iff no lambda != 1 has
      // lambda^(n c + 1) = 1
      bool injective = true;
      for (std::uint64_t idx = 1; idx < q; ++idx) {
        Scalar lam = Scalar::from_index(f, idx);
        if (!lam.is_one() && lam.pow(static_cast<std::int64_t>(n * c + 1)).is_one()) {
          injective = false;
          break;
        }
      }
      ck.require(injective == radial_is_bijective(f, n, c),
                 "gcd criterion disagrees at n = " + std::to_string(n) +
                     ", c = " + std::to_string(c));
    }
  }
  return ck.done("gcd(n c + 1, q - 1) = 1 matches the kernel-scalar scan");
}

using CheckFn = CheckResult (*)(const FieldPtr&, std::uint32_t, std::uint64_t, std::uint32_t);

struct NamedCheck {
  const char* id;
  CheckFn fn;
};

CheckResult run_torus_conjugation(const FieldPtr& f, std::uint32_t n, std::uint64_t seed,
                                  std::uint32_t samples) {
  return check_torus_conjugation(f, n, seed, samples, {});
}

const NamedCheck kChecks[] = {
    {"torus-conjugation-formula", run_torus_conjugation},
    {"homothety-linearity", check_homothety_linearity},
    {"weighted-commutant", check_weighted_commutant},
    {"commutant-commutator-shape", check_commutator_shape},
    {"torus-rescale-conjugacy", check_rescale_conjugacy},
    {"homothety-degree-scaling", check_homothety_scaling},
    {"power-transvection-words", check_power_words},
    {"cyclic-psi-and-powers", check_cyclic_and_powers},
    {"good-composite", check_good_composite},
    {"good-commutator", check_good_commutator},
    {"delta-coefficient", check_delta_coefficient},
    {"bad-to-good", check_bad_to_good},
    {"standard-form-closure", check_standard_closure},
    {"diagonal-fixing", check_diagonal_fixing},
    {"radial-bijectivity", check_radial_bijectivity},
};

// every construction under test must keep a live check
const std::pair<const char*, const char*> kCoverage[] = {
    {"gens.psi", "cyclic-psi-and-powers"},
    {"gens.psi_i", "cyclic-psi-and-powers"},
    {"gens.phi_ijk", "cyclic-psi-and-powers"},
    {"gens.build_phi_m_word", "power-transvection-words"},
    {"gens.good_special_composite", "good-composite"},
    {"gens.commutator_phi1", "good-commutator"},
    {"gens.delta_conjugation", "delta-coefficient"},
    {"gens.bad_to_good", "bad-to-good"},
    {"gens.classify_monomial", "delta-coefficient"},
    {"torus.conjugation_formula", "torus-conjugation-formula"},
    {"torus.weighted_action_point", "weighted-commutant"},
    {"torus.in_commutant_form", "weighted-commutant"},
    {"torus.commutes_with_action", "weighted-commutant"},
    {"torus.commutator_shape_check", "commutant-commutator-shape"},
    {"torus.torus_rescale_conjugacy", "torus-rescale-conjugacy"},
    {"torus.linearity_via_homothety", "homothety-linearity"},
    {"lingrp.apply_standard", "standard-form-closure"},
    {"lingrp.compose_standard", "standard-form-closure"},
    {"lingrp.diagonal_fixing_analysis", "diagonal-fixing"},
    {"lingrp.survey_diagonal_fixers", "diagonal-fixing"},
};

}  // namespace

std::vector<CheckResult> run_suite(const std::vector<FieldPtr>& fields, std::uint32_t nvars,
                                   std::uint64_t seed, std::uint32_t samples) {
  std::vector<CheckResult> results;
  std::set<std::string> executed;
  for (const auto& check : kChecks) {
    for (const auto& f : fields) {
      try {
        results.push_back(check.fn(f, nvars, seed, samples));
      } catch (const error& e) {
        CheckResult r;
        r.id = check.id;
        r.field = f->describe();
        r.nvars = nvars;
        r.seed = seed;
        r.samples = samples;
        r.pass = false;
        r.counterexample = std::string("unexpected error: ") + e.what();
        results.push_back(std::move(r));
      }
      executed.insert(check.id);
    }
  }
  CheckResult coverage;
  coverage.id = "coverage";
  coverage.field = "-";
  coverage.nvars = nvars;
  coverage.seed = seed;
  coverage.samples = samples;
  coverage.pass = true;
  coverage.detail = "every construction keeps a live check";
  for (const auto& [op, check_id] : kCoverage) {
    if (!executed.count(check_id)) {
      coverage.pass = false;
      coverage.counterexample = std::string(op) + " lost its check " + check_id;
      break;
    }
  }
  results.push_back(std::move(coverage));
  return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::string render_report_json(const std::vector<CheckResult>& results,
                               const std::vector<FieldPtr>& fields, std::uint32_t nvars,
                               std::uint64_t seed, std::uint32_t samples) {
  json j;
  json fs = json::array();
  for (const auto& f : fields) fs.push_back(json::parse(io::field_json(f)));
  j["config"] = {{"fields", std::move(fs)}, {"nvars", nvars}, {"seed", seed},
                 {"samples", samples}};
  json checks = json::array();
  for (const auto& r : results) {
    json c = {{"id", r.id},           {"field", r.field}, {"nvars", r.nvars},
              {"seed", r.seed},       {"samples", r.samples}, {"pass", r.pass},
              {"detail", r.detail}};
    if (!r.pass) c["counterexample"] = r.counterexample;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["pass"] = all_pass(results);
  return j.dump(2) + "\n";
}

std::string render_summary(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    out += r.pass ? "PASS  " : "FAIL  ";
    out += r.id;
    out.append(r.id.size() < 30 ? 30 - r.id.size() : 1, ' ');
    out += r.field;
    if (!r.pass) out += "  <- " + r.counterexample;
    out += "\n";
  }
  return out;
}

}  // namespace verify
}  // namespace tame
