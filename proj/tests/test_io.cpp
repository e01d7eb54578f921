#include "doctest.h"

#include "tame/error.hpp"
#include "tame/gens.hpp"
#include "tame/io.hpp"
#include "tame/rng.hpp"

using namespace tame;

TEST_SUITE_BEGIN("io");

TEST_CASE("monomial grammar") {
  Monomial m = io::parse_monomial("x2^2*x3^2", 4);
  CHECK(m.exp(2) == 2);
  CHECK(m.exp(3) == 2);
  CHECK(io::parse_monomial("x2", 4) == Monomial::var(4, 2));
  CHECK(io::parse_monomial("1", 4).is_unit());
  CHECK(io::parse_monomial("x2*x2", 4) == Monomial::var(4, 2, 2));
  CHECK(io::parse_monomial("x2^2*x3", 4).str() == "x2^2*x3");
  CHECK_THROWS_WITH_AS(io::parse_monomial("x9", 4), doctest::Contains("IndexOutOfRange"), error);
  CHECK_THROWS_WITH_AS(io::parse_monomial("y2", 4), doctest::Contains("ParseError"), error);
  CHECK_THROWS_WITH_AS(io::parse_monomial("", 4), doctest::Contains("ParseError"), error);
}

TEST_CASE("scalar literals") {
  FieldPtr f5 = make_field(5);
  CHECK(io::parse_scalar("3", f5) == Scalar::from_int(f5, 3));
  CHECK(io::parse_scalar("8", f5) == Scalar::from_int(f5, 3));
  CHECK(io::parse_scalar("-1", f5) == Scalar::from_int(f5, 4));

  FieldPtr q = rationals();
  CHECK(io::parse_scalar("-2/3", q).str() == "-2/3");
  CHECK(io::parse_scalar("4/6", q).str() == "2/3");

  FieldPtr f9 = make_field(3, 2, {1, 0, 1});
  CHECK(io::parse_scalar("[1,2]", f9) == Scalar::from_coeffs(f9, {1, 2}));
  CHECK(io::parse_scalar("2", f9) == Scalar::from_int(f9, 2));
}

TEST_CASE("polynomial canonical text round-trips bit-exactly") {
  DetRng rng(2024);
  for (auto f : {make_field(3), make_field(5), make_field(3, 2, {1, 0, 1}), rationals()}) {
    for (int i = 0; i < 200; ++i) {
      std::vector<Term> terms;
      std::uint32_t count = static_cast<std::uint32_t>(rng.below(5));
      for (std::uint32_t t = 0; t < count; ++t) {
        std::vector<std::uint16_t> exps(4, 0);
        for (int d = 0; d < 4; ++d) exps[rng.below(4)] += static_cast<std::uint16_t>(rng.below(3));
        Scalar c = f->is_finite() ? Scalar::from_index(f, rng.below(f->order()))
                                  : Scalar::from_int(f, rng.range(-7, 7));
        terms.push_back({Monomial(std::move(exps)), std::move(c)});
      }
      Polynomial p = Polynomial::from_terms(f, 4, std::move(terms));
      Polynomial back = io::parse_polynomial(p.str(), f, 4);
      CHECK(back == p);
      CHECK(back.str() == p.str());
    }
  }
}

TEST_CASE("structured term lists round-trip bit-exactly") {
  DetRng rng(31337);
  for (auto f : {make_field(3), make_field(3, 2, {1, 0, 1}), rationals()}) {
    for (int i = 0; i < 100; ++i) {
      std::vector<Term> terms;
      std::uint32_t count = static_cast<std::uint32_t>(rng.below(5));
      for (std::uint32_t t = 0; t < count; ++t) {
        std::vector<std::uint16_t> exps(4, 0);
        for (int d = 0; d < 3; ++d) exps[rng.below(4)] += static_cast<std::uint16_t>(rng.below(3));
        Scalar c = f->is_finite() ? Scalar::from_index(f, rng.below(f->order()))
                                  : Scalar::from_int(f, rng.range(-7, 7));
        terms.push_back({Monomial(std::move(exps)), std::move(c)});
      }
      Polynomial p = Polynomial::from_terms(f, 4, std::move(terms));
      std::string s = io::render_polynomial_structured(p);
      Polynomial back = io::parse_polynomial_structured(s, f, 4);
      CHECK(back == p);
      CHECK(io::render_polynomial_structured(back) == s);
    }
  }
}

TEST_CASE("endomorphism files accept structured images") {
  FieldPtr f5 = make_field(5);
  std::string text = R"({
    "field": {"p": 5, "k": 1},
    "nvars": 4,
    "images": [
      [{"exps": [1,0,0,0], "coeff": "1"}, {"exps": [0,1,1,0], "coeff": "2"}],
      "1*x2",
      [{"exps": [0,0,1,0], "coeff": "1"}],
      "1*x4"
    ]
  })";
  Endomorphism e = io::parse_endomorphism(text);
  Polynomial quad = Polynomial::variable(f5, 4, 2) * Polynomial::variable(f5, 4, 3);
  CHECK(e == make_elementary(1, quad.scaled(Scalar::from_int(f5, 2))));
}

TEST_CASE("loose input forms normalize to the canonical one") {
  FieldPtr f5 = make_field(5);
  Polynomial a = io::parse_polynomial("2*x1 + x2*x3", f5, 4);
  CHECK(a.str() == "1*x2*x3 + 2*x1");
  Polynomial b = io::parse_polynomial("1*x2*x3+2*x1", f5, 4);
  CHECK(a == b);
  CHECK(io::parse_polynomial("0", f5, 4).is_zero());
  CHECK(io::parse_polynomial("3", f5, 4).constant_term() == Scalar::from_int(f5, 3));
}

TEST_CASE("endomorphism files round-trip") {
  FieldPtr f9 = make_field(3, 2, {1, 0, 1});
  Endomorphism psi = gens::psi(f9, 4);
  Endomorphism back = io::parse_endomorphism(io::render_endomorphism(psi));
  CHECK(back == psi);
  CHECK(back.field()->same_as(*psi.field()));
  CHECK(io::render_endomorphism(back) == io::render_endomorphism(psi));

  // characteristic zero travels through the same format
  FieldPtr q = rationals();
  Polynomial img = Polynomial::variable(q, 4, 1) +
                   (Polynomial::variable(q, 4, 2) * Polynomial::variable(q, 4, 3))
                       .scaled(Scalar::from_rational(q, Rational::from_string("-2/3")));
  Endomorphism e = make_elementary(1, img - Polynomial::variable(q, 4, 1));
  CHECK(io::parse_endomorphism(io::render_endomorphism(e)) == e);
}

TEST_CASE("negative integer literals reduce into the field") {
  FieldPtr f5 = make_field(5);
  CHECK(Scalar::from_int(f5, -7) == Scalar::from_int(f5, 3));
  CHECK(Scalar::from_int(f5, -5) == Scalar::zero(f5));
  CHECK(io::parse_scalar("-7", f5) == Scalar::from_int(f5, 3));
}

TEST_CASE("word serialization round-trips") {
  GeneratorWord w{{"psi", -1}, {"s12", 1}, {"t12", 3}};
  CHECK(io::parse_word(io::render_word(w)) == w);
  CHECK(io::parse_word("[]").empty());
}

TEST_SUITE_END();
