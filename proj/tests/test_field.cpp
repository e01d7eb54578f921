#include "doctest.h"

#include "tame/error.hpp"
#include "tame/field.hpp"
#include "tame/rng.hpp"

using namespace tame;

namespace {

// brute-force irreducibility for degree <= 3: reducible iff a root exists
bool has_root(const std::vector<std::uint64_t>& coeffs, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0, xp = 1;
    for (auto c : coeffs) {
      acc = (acc + c % p * xp) % p;
      xp = xp * x % p;
    }
    if (acc == 0) return true;
  }
  return false;
}

bool make_field_accepts(std::uint64_t p, std::uint32_t k, const std::vector<std::uint64_t>& mod) {
  try {
    make_field(p, k, mod);
    return true;
  } catch (const error& e) {
    REQUIRE(e.code() == errc::reducible_modulus);
    return false;
  }
}

}  // namespace

TEST_SUITE_BEGIN("field");

TEST_CASE("construction accepts odd primes and rejects the rest") {
  CHECK(make_field(5)->describe() == "F_5");
  CHECK(make_field(0)->describe() == "Q");
  CHECK_THROWS_WITH_AS(make_field(2), doctest::Contains("CharacteristicTwo"), error);
  CHECK_THROWS_WITH_AS(make_field(9), doctest::Contains("NotPrime"), error);
  CHECK_THROWS_WITH_AS(make_field(15), doctest::Contains("NotPrime"), error);
}

TEST_CASE("t^2+1 gives F_9, t^2+2 is caught as reducible over F_3") {
  FieldPtr f9 = make_field(3, 2, {1, 0, 1});
  CHECK(f9->order() == 9);
  CHECK_THROWS_AS(make_field(3, 2, {2, 0, 1}), error);  // (t+1)(t+2)
  CHECK_THROWS_AS(make_field(3, 2, {1, 0, 2}), error);  // not monic
  CHECK_THROWS_AS(make_field(3, 3, {1, 0, 1}), error);  // degree mismatch
}

TEST_CASE("irreducibility verdict agrees with exhaustive root search") {
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    for (std::uint32_t k : {2u, 3u}) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < k; ++i) count *= p;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<std::uint64_t> mod;
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < k; ++i) {
          mod.push_back(v % p);
          v /= p;
        }
        mod.push_back(1);  // monic of degree k
        CHECK(make_field_accepts(p, k, mod) == !has_root(mod, p));
      }
    }
  }
}

TEST_CASE("inverses and extension arithmetic hit the expected values") {
  FieldPtr f5 = make_field(5);
  CHECK(Scalar::from_int(f5, 2).inverse() == Scalar::from_int(f5, 3));
  CHECK((Scalar::from_int(f5, 2) * Scalar::from_int(f5, 3)).is_one());

  FieldPtr f9 = make_field(3, 2, {1, 0, 1});
  Scalar t = Scalar::from_coeffs(f9, {0, 1});
  CHECK(t * t == Scalar::from_int(f9, -1));  // reduction by t^2 + 1
  CHECK((t * t.inverse()).is_one());

  CHECK_THROWS_WITH_AS(Scalar::zero(f5).inverse(), doctest::Contains("DivisionByZero"), error);
}

TEST_CASE("cross-field arithmetic is rejected") {
  Scalar a = Scalar::from_int(make_field(3), 1);
  Scalar b = Scalar::from_int(make_field(5), 1);
  CHECK_THROWS_WITH_AS(a + b, doctest::Contains("FieldMismatch"), error);
}

TEST_CASE("multiplicative orders in F_5") {
  FieldPtr f5 = make_field(5);
  CHECK(multiplicative_order(Scalar::from_int(f5, 1)) == 1);
  CHECK(multiplicative_order(Scalar::from_int(f5, 2)) == 4);
  CHECK(multiplicative_order(Scalar::from_int(f5, 4)) == 2);
  CHECK_THROWS_WITH_AS(multiplicative_order(Scalar::zero(f5)), doctest::Contains("ZeroElement"),
                       error);
  CHECK_THROWS_WITH_AS(multiplicative_order(Scalar::from_int(rationals(), 2)),
                       doctest::Contains("InfiniteField"), error);
}

TEST_CASE("field axioms hold on random triples") {
  std::vector<FieldPtr> fields{make_field(3), make_field(5), make_field(7),
                               make_field(3, 2, {1, 0, 1}), rationals()};
  DetRng rng(41);
  for (const auto& f : fields) {
    for (int i = 0; i < 200; ++i) {
      auto pick = [&] {
        return f->is_finite() ? Scalar::from_index(f, rng.below(f->order()))
                              : Scalar::from_int(f, rng.range(-20, 20));
      };
      Scalar a = pick(), b = pick(), c = pick();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Scalar::zero(f) == a);
      CHECK(a * Scalar::one(f) == a);
    }
  }
}

TEST_CASE("every unit inverts exactly, exhaustively over F_9 and F_25") {
  for (auto f : {make_field(3, 2, {1, 0, 1}), make_field(5, 2, {2, 0, 1})}) {
    for (std::uint64_t idx = 1; idx < f->order(); ++idx) {
      Scalar a = Scalar::from_index(f, idx);
      CHECK((a * a.inverse()).is_one());
      CHECK(a.inverse().inverse() == a);
    }
  }
}

TEST_CASE("a^(q-1) = 1 for every unit, exhaustively up to q = 121") {
  std::vector<FieldPtr> fields{make_field(3),  make_field(5),
                               make_field(7),  make_field(11),
                               make_field(3, 2, {1, 0, 1}),   // F_9
                               make_field(5, 2, {2, 0, 1}),   // F_25
                               make_field(7, 2, {1, 0, 1}),   // F_49
                               make_field(11, 2, {1, 0, 1})}; // F_121
  for (const auto& f : fields) {
    std::uint64_t q = f->order();
    REQUIRE(q <= 121);
    for (std::uint64_t idx = 1; idx < q; ++idx) {
      CHECK(Scalar::from_index(f, idx).pow(static_cast<std::int64_t>(q - 1)).is_one());
    }
  }
}

TEST_CASE("rationals stay reduced") {
  FieldPtr q = rationals();
  Scalar half = Scalar::from_rational(q, Rational(BigInt(2), BigInt(4)));
  CHECK(half.str() == "1/2");
  Scalar s = half + half;
  CHECK(s.str() == "1");
  CHECK((Scalar::from_int(q, 3) / Scalar::from_int(q, -6)).str() == "-1/2");
  CHECK(Scalar::from_rational(q, Rational::from_string("-10/15")).str() == "-2/3");
}

TEST_CASE("primitive elements generate the unit group") {
  for (std::uint64_t p : {3ull, 5ull, 7ull}) {
    FieldPtr f = make_field(p);
    CHECK(multiplicative_order(primitive_element(f)) == p - 1);
  }
  FieldPtr f9 = make_field(3, 2, {1, 0, 1});
  CHECK(multiplicative_order(primitive_element(f9)) == 8);
}

TEST_SUITE_END();
