#include "doctest.h"

#include "tame/error.hpp"
#include "tame/gens.hpp"
#include "tame/rng.hpp"
#include "tame/torus.hpp"

using namespace tame;
using namespace tame::torus;

namespace {

Polynomial var(const FieldPtr& f, std::uint32_t n, std::uint32_t i) {
  return Polynomial::variable(f, n, i);
}

Endomorphism random_endo(DetRng& rng, const FieldPtr& f, std::uint32_t n, std::uint32_t max_deg) {
  std::vector<Polynomial> images;
  for (std::uint32_t v = 0; v < n; ++v) {
    std::vector<Term> terms;
    std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.below(3));
    for (std::uint32_t t = 0; t < count; ++t) {
      std::vector<std::uint16_t> exps(n, 0);
      std::uint32_t budget = static_cast<std::uint32_t>(rng.below(max_deg + 1));
      for (std::uint32_t d = 0; d < budget; ++d) exps[rng.below(n)] += 1;
      terms.push_back({Monomial(std::move(exps)), Scalar::from_index(f, rng.below(f->order()))});
    }
    images.push_back(Polynomial::from_terms(f, n, std::move(terms)));
  }
  return Endomorphism::from_images(std::move(images));
}

TorusPoint random_point(DetRng& rng, const FieldPtr& f, std::uint32_t n) {
  std::vector<Scalar> entries;
  for (std::uint32_t i = 0; i < n; ++i) {
    entries.push_back(Scalar::from_index(f, 1 + rng.below(f->order() - 1)));
  }
  return TorusPoint(std::move(entries));
}

}  // namespace

TEST_SUITE_BEGIN("torus");

TEST_CASE("closed conjugation law equals composition, the module's central oracle") {
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    FieldPtr f = make_field(p);
    const std::uint32_t n = 4;
    DetRng rng(p * 131);
    for (int i = 0; i < 200; ++i) {
      TorusPoint alpha = random_point(rng, f, n);
      TorusPoint beta = random_point(rng, f, n);
      Endomorphism phi = random_endo(rng, f, n, 4);
      Endomorphism lhs = conjugation_formula(alpha, phi, beta);
      Endomorphism rhs =
          compose(alpha.as_endomorphism(), compose(phi, beta.as_endomorphism()));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("identity points leave the map alone; the frozen F_5 example holds") {
  FieldPtr f5 = make_field(5);
  const std::uint32_t n = 4;
  Endomorphism psi = gens::psi(f5, n);
  TorusPoint id = TorusPoint::identity(f5, n);
  CHECK(conjugation_formula(id, psi, id) == psi);

  std::vector<Scalar> entries{Scalar::from_int(f5, 2), Scalar::one(f5), Scalar::one(f5),
                              Scalar::one(f5)};
  TorusPoint alpha(entries);
  Endomorphism conj = conjugation_formula(alpha, psi, alpha.inverse());
  CHECK(conj.image(1) ==
        var(f5, n, 1) + (var(f5, n, 2) * var(f5, n, 3)).scaled(Scalar::from_int(f5, 3)));
}

TEST_CASE("torus points form an abelian group; conjugation preserves supports") {
  FieldPtr f7 = make_field(7);
  DetRng rng(77);
  const std::uint32_t n = 4;
  for (int i = 0; i < 50; ++i) {
    TorusPoint a = random_point(rng, f7, n);
    TorusPoint b = random_point(rng, f7, n);
    CHECK(a.composed(b) == b.composed(a));
    CHECK(a.composed(a.inverse()) == TorusPoint::identity(f7, n));
    Endomorphism phi = random_endo(rng, f7, n, 4);
    Endomorphism conj = conjugation_formula(a, phi, a.inverse());
    for (std::uint32_t v = 1; v <= n; ++v) {
      CHECK(conj.image(v).support() == phi.image(v).support());
    }
  }
}

TEST_CASE("weighted action points") {
  FieldPtr f7 = make_field(7);
  const std::uint32_t n = 3;
  WeightVector w = make_weights({2, 1}, n);
  std::vector<Scalar> lambdas{Scalar::from_int(f7, 2), Scalar::from_int(f7, 3)};
  TorusPoint pt = weighted_action_point(w, lambdas);
  CHECK(pt.entry(1) == Scalar::from_int(f7, 5));  // 4 * 3 = 12 = 5 mod 7
  CHECK(pt.entry(2) == Scalar::from_int(f7, 2));
  CHECK(pt.entry(3) == Scalar::from_int(f7, 3));

  std::vector<Scalar> ones(n - 1, Scalar::one(f7));
  CHECK(weighted_action_point(w, ones) == TorusPoint::identity(f7, n));

  // quadratic weights scale x1 by lambda2 * lambda3
  WeightVector qw = quadratic_weights(4);
  std::vector<Scalar> l{Scalar::from_int(f7, 2), Scalar::from_int(f7, 3),
                        Scalar::from_int(f7, 4)};
  TorusPoint qpt = weighted_action_point(qw, l);
  CHECK(qpt.entry(1) == Scalar::from_int(f7, 6));
  CHECK(qpt.entry(4) == Scalar::from_int(f7, 4));

  CHECK_THROWS_WITH_AS(make_weights({1, 0}, 3), doctest::Contains("weight sum"), error);
  std::vector<Scalar> with_zero{Scalar::zero(f7), Scalar::one(f7)};
  CHECK_THROWS_WITH_AS(weighted_action_point(w, with_zero), doctest::Contains("ZeroEntry"),
                       error);
}

TEST_CASE("commutant membership shape") {
  FieldPtr f5 = make_field(5);
  const std::uint32_t n = 4;
  WeightVector qw = quadratic_weights(n);
  CHECK(in_commutant_form(gens::psi(f5, n), qw));
  CHECK(in_commutant_form(Endomorphism::identity(f5, n), qw));
  std::vector<Scalar> d{Scalar::from_int(f5, 2), Scalar::from_int(f5, 3),
                        Scalar::from_int(f5, 4), Scalar::one(f5)};
  CHECK(in_commutant_form(make_linear(Matrix::diagonal(d)), qw));
  CHECK(!in_commutant_form(make_elementary(1, var(f5, n, 2).pow(2)), qw));
  CHECK(!in_commutant_form(make_elementary(2, var(f5, n, 3)), qw));
}

TEST_CASE("commutation sampling: small fields refuse, F_9 decides") {
  const std::uint32_t n = 4;
  WeightVector qw = quadratic_weights(n);
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    FieldPtr f = make_field(p);
    CHECK_THROWS_WITH_AS(commutes_with_action(gens::psi(f, n), qw, 8),
                         doctest::Contains("FieldTooSmall"), error);
  }
  FieldPtr f9 = make_field(3, 2, {1, 0, 1});
  CHECK(commutes_with_action(gens::psi(f9, n), qw, 8));
  CHECK(!commutes_with_action(make_elementary(1, var(f9, n, 2).pow(2)), qw, 8));
  std::vector<Scalar> d(n, Scalar::from_coeffs(f9, {0, 1}));
  CHECK(commutes_with_action(make_linear(Matrix::diagonal(d)), qw, 8));

  // corrupted members must be witnessed by some sample point
  DetRng rng(9);
  for (int i = 0; i < 100; ++i) {
    std::vector<Polynomial> images;
    images.push_back(Polynomial::monomial(Scalar::from_index(f9, 1 + rng.below(8)),
                                          Monomial::var(n, 1)));
    for (std::uint32_t j = 2; j <= n; ++j) {
      images.push_back(Polynomial::monomial(Scalar::from_index(f9, 1 + rng.below(8)),
                                            Monomial::var(n, j)));
    }
    std::uint32_t jj = 2 + rng.below(n - 1);
    std::uint32_t ll = 2 + rng.below(n - 1);
    if (ll == jj) ll = ll == n ? 2 : ll + 1;
    images[jj - 1] = images[jj - 1] + var(f9, n, ll);
    Endomorphism corrupted = Endomorphism::from_images(std::move(images));
    CHECK(!commutes_with_action(corrupted, qw, 8));
  }
}

TEST_CASE("commutator of commutant members stays on the quadratic line") {
  FieldPtr f5 = make_field(5);
  const std::uint32_t n = 4;
  Monomial q = Monomial::var(n, 2).times(Monomial::var(n, 3));

  auto member = [&](std::int64_t a1, std::int64_t beta) {
    std::vector<Polynomial> images;
    images.push_back(Polynomial::monomial(Scalar::from_int(f5, a1), Monomial::var(n, 1)) +
                     Polynomial::monomial(Scalar::from_int(f5, beta), q));
    for (std::uint32_t j = 2; j <= n; ++j) images.push_back(var(f5, n, j));
    return Endomorphism::from_images(std::move(images));
  };

  Endomorphism f = member(2, 1);
  Endomorphism g = member(1, 1);
  CommutatorShape shape = commutator_shape_check(f, g);
  CHECK(shape.in_shape);

  CommutatorShape self = commutator_shape_check(f, f);
  CHECK(self.in_shape);
  CHECK(self.beta.is_zero());
  CHECK(self.commutator == Endomorphism::identity(f5, n));

  DetRng rng(55);
  for (int i = 0; i < 100; ++i) {
    Endomorphism a = member(1 + rng.below(4), rng.below(5));
    Endomorphism b = member(1 + rng.below(4), rng.below(5));
    CHECK(commutator_shape_check(a, b).in_shape);
  }

  CHECK_THROWS_WITH_AS(commutator_shape_check(f, make_elementary(2, var(f5, n, 3))),
                       doctest::Contains("NotInCommutant"), error);
}

TEST_CASE("torus rescaling conjugacy") {
  FieldPtr f5 = make_field(5);
  const std::uint32_t n = 4;
  Monomial q = Monomial::var(n, 2).times(Monomial::var(n, 3));

  CHECK(torus_rescale_conjugacy(Scalar::one(f5), q) == TorusPoint::identity(f5, n));

  Scalar beta = Scalar::from_int(f5, 2);
  TorusPoint lam = torus_rescale_conjugacy(beta, q);
  CHECK(lam.entry(2) == beta);
  Endomorphism base = gens::psi(f5, n);
  CHECK(conjugation_formula(lam, base, lam.inverse()) ==
        make_elementary(1, Polynomial::monomial(beta, q)));

  // squares only reach squares in F_5
  Monomial sq = Monomial::var(n, 2, 2);
  TorusPoint ok = torus_rescale_conjugacy(Scalar::from_int(f5, 4), sq);
  CHECK(conjugation_formula(ok, make_elementary(1, Polynomial::monomial(Scalar::one(f5), sq)),
                            ok.inverse()) ==
        make_elementary(1, Polynomial::monomial(Scalar::from_int(f5, 4), sq)));
  CHECK_THROWS_WITH_AS(torus_rescale_conjugacy(Scalar::from_int(f5, 2), sq),
                       doctest::Contains("NoSolution"), error);

  CHECK_THROWS_WITH_AS(torus_rescale_conjugacy(Scalar::zero(f5), q),
                       doctest::Contains("ZeroBeta"), error);
  CHECK_THROWS_WITH_AS(torus_rescale_conjugacy(Scalar::one(f5), Monomial::var(n, 1, 2)),
                       doctest::Contains("InvolvesTarget"), error);

  // mixed-exponent lattice solve: x2^2 x3^3 can always reach beta over F_7
  FieldPtr f7 = make_field(7);
  Monomial mixed(std::vector<std::uint16_t>{0, 2, 3, 0});
  for (std::uint64_t idx = 1; idx < 7; ++idx) {
    Scalar target = Scalar::from_index(f7, idx);
    TorusPoint pt = torus_rescale_conjugacy(target, mixed);
    Endomorphism one =
        make_elementary(1, Polynomial::monomial(Scalar::one(f7), mixed));
    CHECK(conjugation_formula(pt, one, pt.inverse()) ==
          make_elementary(1, Polynomial::monomial(target, mixed)));
  }
}

TEST_CASE("homothety linearity probe") {
  FieldPtr f5 = make_field(5);
  FieldPtr f3 = make_field(3);
  const std::uint32_t n = 4;
  DetRng rng(5);
  for (int i = 0; i < 20; ++i) {
    Matrix m(f5, n);
    do {
      std::vector<Scalar> entries;
      for (std::uint32_t e = 0; e < n * n; ++e) {
        entries.push_back(Scalar::from_index(f5, rng.below(5)));
      }
      m = Matrix::from_entries(f5, n, std::move(entries));
    } while (!m.is_invertible());
    CHECK(linearity_via_homothety(make_linear(m)));
  }
  CHECK(!linearity_via_homothety(gens::psi(f5, n)));
  CHECK_THROWS_WITH_AS(linearity_via_homothety(gens::psi(f3, n)),
                       doctest::Contains("FieldTooSmall"), error);
}

TEST_CASE("homothety conjugation scales degree-d terms by lambda^(d-1)") {
  FieldPtr f7 = make_field(7);
  const std::uint32_t n = 4;
  DetRng rng(70);
  for (int i = 0; i < 100; ++i) {
    Scalar h = Scalar::from_index(f7, 1 + rng.below(6));
    Endomorphism phi = random_endo(rng, f7, n, 4);
    TorusPoint hom = TorusPoint::homothety(f7, n, h);
    Endomorphism conj = conjugation_formula(hom, phi, hom.inverse());
    for (std::uint32_t v = 1; v <= n; ++v) {
      for (const auto& t : phi.image(v).terms()) {
        CHECK(conj.image(v).coefficient_of(t.mono) ==
              t.coeff * h.pow(static_cast<std::int64_t>(t.mono.degree()) - 1));
      }
    }
  }
}

TEST_SUITE_END();
