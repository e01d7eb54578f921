#include "doctest.h"

#include "tame/endo.hpp"
#include "tame/error.hpp"
#include "tame/gens.hpp"
#include "tame/rng.hpp"
#include "tame/search.hpp"

using namespace tame;

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

}  // namespace

TEST_SUITE_BEGIN("endo");

TEST_CASE("composition convention: (f o g)(x) = f(g(x))") {
  FieldPtr f5 = make_field(5);
  const std::uint32_t n = 4;
  Endomorphism f = make_elementary(1, var(f5, n, 2) * var(f5, n, 3));
  Endomorphism g = make_elementary(2, var(f5, n, 3).pow(2));

  Endomorphism gf = compose(g, f);
  CHECK(gf.image(1) ==
        var(f5, n, 1) + var(f5, n, 2) * var(f5, n, 3) + var(f5, n, 3).pow(3));

  Endomorphism fg = compose(f, g);
  CHECK(fg.image(1) == var(f5, n, 1) + var(f5, n, 2) * var(f5, n, 3));

  CHECK(compose(f, Endomorphism::identity(f5, n)) == f);
  CHECK(compose(Endomorphism::identity(f5, n), f) == f);
}

TEST_CASE("diagonal conjugation rescales the quadratic term") {
  FieldPtr f5 = make_field(5);
  const std::uint32_t n = 4;
  std::vector<Scalar> d{Scalar::from_int(f5, 2), Scalar::one(f5), Scalar::one(f5),
                        Scalar::one(f5)};
  Endomorphism alpha = make_linear(Matrix::diagonal(d));
  Endomorphism psi = make_elementary(1, var(f5, n, 2) * var(f5, n, 3));
  Endomorphism conj = compose(alpha, compose(psi, invert(alpha)));
  CHECK(conj.image(1) ==
        var(f5, n, 1) + (var(f5, n, 2) * var(f5, n, 3)).scaled(Scalar::from_int(f5, 3)));
}

TEST_CASE("elementary constructor guards its preconditions") {
  FieldPtr f3 = make_field(3);
  const std::uint32_t n = 4;
  CHECK_THROWS_WITH_AS(make_elementary(1, var(f3, n, 1) * var(f3, n, 2)),
                       doctest::Contains("SelfDependentP"), error);
  Polynomial with_constant = var(f3, n, 2) + Polynomial::constant(Scalar::one(f3), n);
  CHECK_THROWS_WITH_AS(make_elementary(1, with_constant),
                       doctest::Contains("ConstantTermPresent"), error);
}

TEST_CASE("linear embedding and its inverse") {
  FieldPtr f5 = make_field(5);
  const std::uint32_t n = 4;
  CHECK(make_linear(Matrix::identity(f5, n)) == Endomorphism::identity(f5, n));

  Matrix swap23 = Matrix::identity(f5, n);
  swap23.set(1, 1, Scalar::zero(f5));
  swap23.set(2, 2, Scalar::zero(f5));
  swap23.set(1, 2, Scalar::one(f5));
  swap23.set(2, 1, Scalar::one(f5));
  Endomorphism s = make_linear(swap23);
  CHECK(s.image(2) == var(f5, n, 3));
  CHECK(s.image(3) == var(f5, n, 2));

  Endomorphism psi = make_elementary(1, var(f5, n, 2) * var(f5, n, 3));
  CHECK(!as_matrix(psi).has_value());

  DetRng rng(5);
  for (int i = 0; i < 30; ++i) {
    Matrix m(f5, n);
    do {
      std::vector<Scalar> entries;
      for (std::uint32_t e = 0; e < n * n; ++e) {
        entries.push_back(Scalar::from_index(f5, rng.below(5)));
      }
      m = Matrix::from_entries(f5, n, std::move(entries));
    } while (!m.is_invertible());
    auto back = as_matrix(make_linear(m));
    REQUIRE(back.has_value());
    CHECK(*back == m);
  }

  Matrix singular(f5, n);
  CHECK_THROWS_WITH_AS(make_linear(singular), doctest::Contains("SingularMatrix"), error);
}

TEST_CASE("composition of linear maps multiplies matrices in reverse") {
  // (f o g)(x_i) = g's row expanded through f, so the matrix of f o g is
  // B * A for f = A, g = B
  FieldPtr f7 = make_field(7);
  const std::uint32_t n = 3;
  DetRng rng(3);
  for (int i = 0; i < 20; ++i) {
    Matrix a(f7, n), b(f7, n);
    do {
      std::vector<Scalar> ea, eb;
      for (std::uint32_t e = 0; e < n * n; ++e) {
        ea.push_back(Scalar::from_index(f7, rng.below(7)));
        eb.push_back(Scalar::from_index(f7, rng.below(7)));
      }
      a = Matrix::from_entries(f7, n, std::move(ea));
      b = Matrix::from_entries(f7, n, std::move(eb));
    } while (!a.is_invertible() || !b.is_invertible());
    auto m = as_matrix(compose(make_linear(a), make_linear(b)));
    REQUIRE(m.has_value());
    CHECK(*m == b * a);
  }
}

TEST_CASE("restricted inversion") {
  FieldPtr f5 = make_field(5);
  const std::uint32_t n = 4;
  Endomorphism psi = make_elementary(1, var(f5, n, 2) * var(f5, n, 3));
  CHECK(invert(psi).image(1) == var(f5, n, 1) - var(f5, n, 2) * var(f5, n, 3));
  CHECK(verify_inverse_pair(psi, invert(psi)));
  CHECK(!verify_inverse_pair(psi, psi));

  std::vector<Scalar> d{Scalar::from_int(f5, 2), Scalar::from_int(f5, 3), Scalar::one(f5),
                        Scalar::from_int(f5, 4)};
  Endomorphism diag = make_linear(Matrix::diagonal(d));
  CHECK(verify_inverse_pair(diag, invert(diag)));

  Endomorphism tangled = compose(psi, make_elementary(2, var(f5, n, 3).pow(2)));
  CHECK_THROWS_WITH_AS(invert(tangled), doctest::Contains("UnsupportedShape"), error);
}

TEST_CASE("split_elementary factors commute and recompose") {
  FieldPtr f3 = make_field(3);
  const std::uint32_t n = 4;
  Polynomial p = var(f3, n, 2) * var(f3, n, 3) + var(f3, n, 3).pow(2);
  Endomorphism e = make_elementary(1, p);
  auto parts = split_elementary(e);
  REQUIRE(parts.size() == 2);
  CHECK(compose(parts[0], parts[1]) == e);
  CHECK(compose(parts[1], parts[0]) == e);

  DetRng rng(17);
  for (int i = 0; i < 100; ++i) {
    std::vector<Term> terms;
    std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.below(4));
    for (std::uint32_t t = 0; t < count; ++t) {
      std::vector<std::uint16_t> exps(n, 0);
      std::uint32_t budget = 1 + static_cast<std::uint32_t>(rng.below(3));
      for (std::uint32_t d = 0; d < budget; ++d) exps[1 + rng.below(n - 1)] += 1;
      terms.push_back({Monomial(std::move(exps)), Scalar::from_index(f3, rng.below(3))});
    }
    Polynomial body = Polynomial::from_terms(f3, n, std::move(terms));
    Endomorphism elem = make_elementary(1, body);
    auto factors = split_elementary(elem);
    Endomorphism forward = Endomorphism::identity(f3, n);
    Endomorphism backward = Endomorphism::identity(f3, n);
    for (const auto& piece : factors) forward = compose(forward, piece);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      backward = compose(backward, *it);
    }
    CHECK(forward == elem);
    CHECK(backward == elem);
  }

  CHECK_THROWS_WITH_AS(split_elementary(compose(e, make_elementary(2, var(f3, n, 4)))),
                       doctest::Contains("NotElementary"), error);
}

TEST_CASE("composition is associative and preserves the origin") {
  for (auto f : {make_field(3), make_field(5), make_field(7)}) {
    DetRng rng(f->order());
    const std::uint32_t n = 4;
    for (int i = 0; i < 200; ++i) {
      Endomorphism a = random_endo(rng, f, n, 3);
      Endomorphism b = random_endo(rng, f, n, 3);
      Endomorphism c = random_endo(rng, f, n, 3);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
    for (int i = 0; i < 50; ++i) {
      Endomorphism a = random_endo(rng, f, n, 3);
      Endomorphism b = random_endo(rng, f, n, 3);
      if (a.is_origin_preserving() && b.is_origin_preserving()) {
        CHECK(compose(a, b).is_origin_preserving());
      }
    }
  }
}

TEST_CASE("word evaluation") {
  FieldPtr f3 = make_field(3);
  const std::uint32_t n = 4;
  GeneratorSet gens = search::default_generators(f3, n);

  CHECK(eval_word({}, gens) == Endomorphism::identity(f3, n));
  CHECK(eval_word({{"psi", 1}}, gens) == gens::psi(f3, n));
  CHECK(eval_word({{"psi", -2}, {"psi", 2}}, gens) == Endomorphism::identity(f3, n));
  CHECK_THROWS_WITH_AS(eval_word({{"nope", 1}}, gens), doctest::Contains("UnknownTag"), error);

  DetRng rng(23);
  for (int i = 0; i < 100; ++i) {
    GeneratorWord w;
    std::uint32_t len = static_cast<std::uint32_t>(rng.below(7));
    for (std::uint32_t l = 0; l < len; ++l) {
      const auto& entry = gens.at(rng.below(gens.size()));
      w.push_back({entry.tag, rng.below(2) ? 1 : -1});
    }
    CHECK(compose(eval_word(inverted_word(w), gens), eval_word(w, gens)) ==
          Endomorphism::identity(f3, n));
  }
}

TEST_CASE("generator sets insist on verified inverses and unique tags") {
  FieldPtr f3 = make_field(3);
  const std::uint32_t n = 4;
  GeneratorSet set(f3, n);
  Endomorphism psi = gens::psi(f3, n);
  set.add("psi", psi);
  CHECK_THROWS_WITH_AS(set.add("psi", psi), doctest::Contains("duplicate"), error);
  CHECK_THROWS_WITH_AS(set.add_with_inverse("bad", psi, psi),
                       doctest::Contains("fails verification"), error);
  CHECK_THROWS_WITH_AS(set.at("missing"), doctest::Contains("UnknownTag"), error);
}

TEST_SUITE_END();
