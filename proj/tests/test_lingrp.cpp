#include "doctest.h"

#include <map>

#include "tame/error.hpp"
#include "tame/lingrp.hpp"
#include "tame/rng.hpp"

using namespace tame;

namespace {

Matrix random_invertible(DetRng& rng, const FieldPtr& f, std::uint32_t n) {
  for (;;) {
    std::vector<Scalar> entries;
    for (std::uint32_t i = 0; i < n * n; ++i) {
      entries.push_back(Scalar::from_index(f, rng.below(f->order())));
    }
    Matrix m = Matrix::from_entries(f, n, std::move(entries));
    if (m.is_invertible()) return m;
  }
}

StandardAuto random_standard(DetRng& rng, const FieldPtr& f, std::uint32_t n) {
  return make_standard_auto(rng.below(2) != 0, random_invertible(rng, f, n),
                            static_cast<std::uint32_t>(rng.below(f->extension_degree())),
                            rng.below(f->order() - 1));
}

}  // namespace

TEST_SUITE_BEGIN("lingrp");

TEST_CASE("matrix arithmetic basics") {
  FieldPtr f7 = make_field(7);
  Matrix id = Matrix::identity(f7, 3);
  CHECK(id.inverse() == id);
  std::vector<Scalar> d{Scalar::from_int(f7, 2), Scalar::from_int(f7, 3), Scalar::one(f7)};
  CHECK(Matrix::diagonal(d).det() == Scalar::from_int(f7, 6));
  Matrix zero(f7, 3);
  CHECK(!zero.is_invertible());
  CHECK_THROWS_WITH_AS(zero.inverse(), doctest::Contains("SingularMatrix"), error);

  DetRng rng(7);
  for (int i = 0; i < 50; ++i) {
    Matrix a = random_invertible(rng, f7, 3);
    CHECK(a * a.inverse() == id);
    CHECK(a.inverse() * a == id);
    CHECK(a.transpose().transpose() == a);
    Matrix b = random_invertible(rng, f7, 3);
    CHECK((a * b).det() == a.det() * b.det());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
  }
}

TEST_CASE("standard automorphism application") {
  FieldPtr f5 = make_field(5);
  const std::uint32_t n = 3;
  StandardAuto id = identity_standard_auto(f5, n);
  DetRng rng(50);
  Matrix a = random_invertible(rng, f5, n);
  CHECK(apply_standard(id, a) == a);

  StandardAuto flip = make_standard_auto(true, Matrix::identity(f5, n), 0, 0);
  std::vector<Scalar> d{Scalar::from_int(f5, 2), Scalar::from_int(f5, 3), Scalar::one(f5)};
  Matrix diag = Matrix::diagonal(d);
  Matrix flipped = apply_standard(flip, diag);
  CHECK(flipped == diag.inverse());

  StandardAuto radial = make_standard_auto(false, Matrix::identity(f5, n), 0, 1);
  std::vector<Scalar> d2{Scalar::from_int(f5, 2), Scalar::one(f5), Scalar::one(f5)};
  Matrix in = Matrix::diagonal(d2);
  std::vector<Scalar> want{Scalar::from_int(f5, 4), Scalar::from_int(f5, 2),
                           Scalar::from_int(f5, 2)};
  CHECK(apply_standard(radial, in) == Matrix::diagonal(want));

  Matrix singular(f5, n);
  CHECK_THROWS_WITH_AS(apply_standard(id, singular), doctest::Contains("SingularInput"), error);
}

TEST_CASE("standard maps are multiplicative") {
  for (auto f : {make_field(3), make_field(5), make_field(3, 2, {1, 0, 1})}) {
    DetRng rng(f->order());
    for (std::uint32_t n : {2u, 3u}) {
      for (int i = 0; i < 25; ++i) {
        StandardAuto phi = random_standard(rng, f, n);
        Matrix a = random_invertible(rng, f, n);
        Matrix b = random_invertible(rng, f, n);
        CHECK(apply_standard(phi, a * b) == apply_standard(phi, a) * apply_standard(phi, b));
      }
    }
  }
}

TEST_CASE("composition normal form agrees with functional composition") {
  FieldPtr f9 = make_field(3, 2, {1, 0, 1});  // theta is honest here
  DetRng rng(9);
  const std::uint32_t n = 3;
  for (int i = 0; i < 60; ++i) {
    StandardAuto a = random_standard(rng, f9, n);
    StandardAuto b = random_standard(rng, f9, n);
    StandardAuto ab = compose_standard(a, b);
    Matrix x = random_invertible(rng, f9, n);
    CHECK(apply_standard(ab, x) == apply_standard(a, apply_standard(b, x)));
  }

  // the flip slides past conjugation by transpose-inverting the conjugator
  FieldPtr f5 = make_field(5);
  DetRng rng5(5);
  for (int i = 0; i < 100; ++i) {
    Matrix s = random_invertible(rng5, f5, n);
    StandardAuto flip = make_standard_auto(true, Matrix::identity(f5, n), 0, 0);
    StandardAuto ad_s = make_standard_auto(false, s, 0, 0);
    StandardAuto ad_st = make_standard_auto(false, s.inverse().transpose(), 0, 0);
    Matrix x = random_invertible(rng5, f5, n);
    CHECK(apply_standard(compose_standard(flip, ad_s), x) ==
          apply_standard(compose_standard(ad_st, flip), x));
  }

  StandardAuto flip = make_standard_auto(true, Matrix::identity(f5, n), 0, 0);
  StandardAuto twice = compose_standard(flip, flip);
  CHECK(!twice.transpose_inverse);
  DetRng rng2(2);
  Matrix probe = random_invertible(rng2, f5, n);
  CHECK(apply_standard(twice, probe) == probe);

  // composing with the identity changes nothing, pointwise
  StandardAuto id = identity_standard_auto(f5, n);
  StandardAuto some = random_standard(rng2, f5, n);
  CHECK(apply_standard(compose_standard(some, id), probe) == apply_standard(some, probe));
  CHECK(apply_standard(compose_standard(id, some), probe) == apply_standard(some, probe));
}

TEST_CASE("radial bijectivity criterion vs brute force on GL_2(F_3)") {
  FieldPtr f3 = make_field(3);
  std::vector<Matrix> gl2 = all_gl_matrices(f3, 2, 1000);
  CHECK(gl2.size() == 48);
  for (std::uint64_t c = 0; c < 2; ++c) {
    StandardAuto radial = make_standard_auto(false, Matrix::identity(f3, 2), 0, c);
    std::map<std::string, int> image_counts;
    for (const auto& a : gl2) image_counts[apply_standard(radial, a).str()] += 1;
    bool bijective = image_counts.size() == gl2.size();
    CHECK(bijective == radial_is_bijective(f3, 2, c));
  }
}

TEST_CASE("radial bijectivity criterion vs kernel scalars for n <= 3, q <= 9") {
  for (auto f : {make_field(3), make_field(5), make_field(7), make_field(3, 2, {1, 0, 1})}) {
    std::uint64_t q = f->order();
    for (std::uint32_t n : {2u, 3u}) {
      for (std::uint64_t c = 0; c < q - 1; ++c) {
        bool injective = true;
        for (std::uint64_t idx = 1; idx < q; ++idx) {
          Scalar lam = Scalar::from_index(f, idx);
          if (!lam.is_one() && lam.pow(static_cast<std::int64_t>(n * c + 1)).is_one()) {
            injective = false;
            break;
          }
        }
        CHECK(injective == radial_is_bijective(f, n, c));
      }
    }
  }
}

TEST_CASE("frobenius twist fixes every diagonal exactly when trivial") {
  FieldPtr f9 = make_field(3, 2, {1, 0, 1});
  const std::uint32_t n = 2;
  for (std::uint32_t e : {0u, 1u}) {
    StandardAuto twist = make_standard_auto(false, Matrix::identity(f9, n), e, 0);
    bool fixes_all = true;
    for (const auto& d : all_invertible_diagonals(f9, n, 1000)) {
      if (apply_standard(twist, d) != d) {
        fixes_all = false;
        break;
      }
    }
    CHECK(fixes_all == (e == 0));
  }
}

TEST_CASE("diagonal fixing analysis") {
  FieldPtr f5 = make_field(5);
  const std::uint32_t n = 3;
  std::vector<Scalar> d{Scalar::from_int(f5, 2), Scalar::from_int(f5, 3), Scalar::one(f5)};
  StandardAuto inner = make_standard_auto(false, Matrix::diagonal(d), 0, 0);
  CHECK(diagonal_fixing_analysis(inner, 100000).fixes_all_diagonals);

  StandardAuto flip = make_standard_auto(true, Matrix::identity(f5, n), 0, 0);
  DiagonalFixingReport rep = diagonal_fixing_analysis(flip, 100000);
  CHECK(!rep.fixes_all_diagonals);
  REQUIRE(rep.witness.has_value());
  CHECK(apply_standard(flip, *rep.witness) != *rep.witness);
  CHECK(!rep.omega_identity);

  StandardAuto radial2 = make_standard_auto(false, Matrix::identity(f5, n), 0, 2);
  CHECK(!diagonal_fixing_analysis(radial2, 100000).fixes_all_diagonals);

  CHECK_THROWS_WITH_AS(diagonal_fixing_analysis(inner, 10),
                       doctest::Contains("EnumerationTooLarge"), error);
}

TEST_CASE("diagonal-fixer survey over monomial conjugators") {
  // q = 5: every fixer is trivial in flip, twist, and character
  FieldPtr f5 = make_field(5);
  SurveyReport rep5 = survey_diagonal_fixers(f5, 3, 2'000'000, ConjugatorRange::monomial);
  CHECK(rep5.fixers.size() == 64);  // diagonal conjugators only
  for (const auto& e : rep5.fixers) {
    CHECK(!e.transpose_inverse);
    CHECK(e.frobenius_exp == 0);
    CHECK(e.det_character_exp == 0);
    CHECK(e.conjugator.is_diagonal());
    CHECK(e.inner);
  }

  // q = 3 is degenerate: every unit is its own inverse, so the flip slips in
  FieldPtr f3 = make_field(3);
  SurveyReport rep3 = survey_diagonal_fixers(f3, 3, 2'000'000, ConjugatorRange::monomial);
  CHECK(rep3.fixers.size() == 16);
  int flips = 0;
  for (const auto& e : rep3.fixers) {
    CHECK(e.frobenius_exp == 0);
    CHECK(e.det_character_exp == 0);
    CHECK(e.conjugator.is_diagonal());
    if (e.transpose_inverse) {
      ++flips;
      CHECK(!e.inner);
    }
  }
  CHECK(flips == 8);

  CHECK_THROWS_WITH_AS(survey_diagonal_fixers(f5, 3, 10), doctest::Contains("EnumerationTooLarge"),
                       error);
}

TEST_SUITE_END();
