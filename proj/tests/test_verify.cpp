#include "doctest.h"

#include "tame/verify.hpp"

using namespace tame;

TEST_SUITE_BEGIN("verify");

TEST_CASE("the battery passes on a small run and reruns byte-identically") {
  std::vector<FieldPtr> fields{make_field(3)};
  auto results = verify::run_suite(fields, 4, 7, 20);
  for (const auto& r : results) {
    INFO(r.id, " over ", r.field, ": ", r.counterexample);
    CHECK(r.pass);
  }
  std::string a = verify::render_report_json(results, fields, 4, 7, 20);
  std::string b = verify::render_report_json(verify::run_suite(fields, 4, 7, 20), fields, 4, 7, 20);
  CHECK(a == b);
  CHECK(verify::all_pass(results));
}

TEST_CASE("coverage entry is present") {
  std::vector<FieldPtr> fields{make_field(3)};
  auto results = verify::run_suite(fields, 4, 1, 4);
  bool found = false;
  for (const auto& r : results) {
    if (r.id == "coverage") {
      found = true;
      CHECK(r.pass);
    }
  }
  CHECK(found);
}

TEST_CASE("a corrupted composition convention is caught with a counterexample") {
  FieldPtr f5 = make_field(5);
  // swap the composition order behind the check's back
  verify::ComposeFn corrupted = [](const Endomorphism& a, const Endomorphism& b) {
    return compose(b, a);
  };
  verify::CheckResult r = verify::check_torus_conjugation(f5, 4, 3, 50, corrupted);
  CHECK(!r.pass);
  CHECK(!r.counterexample.empty());

  verify::CheckResult honest = verify::check_torus_conjugation(f5, 4, 3, 50);
  CHECK(honest.pass);
}

TEST_CASE("different seeds keep verdicts but may change witnesses deterministically") {
  std::vector<FieldPtr> fields{make_field(5)};
  auto r1 = verify::run_suite(fields, 4, 1, 10);
  auto r2 = verify::run_suite(fields, 4, 2, 10);
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].id == r2[i].id);
    CHECK(r1[i].pass == r2[i].pass);
  }
}

TEST_SUITE_END();
