#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tame/endo.hpp"

namespace tame {
namespace verify {

struct CheckResult {
  std::string id;
  std::string field;
  std::uint32_t nvars = 0;
  std::uint64_t seed = 0;
  std::uint32_t samples = 0;
  bool pass = false;
  std::string detail;          // one-line note on what ran
  std::string counterexample;  // first recorded witness on failure
};

/// Composition hook for mutation testing: the torus-conjugation check
/// compares the closed-form law against whatever composition it is handed.
using ComposeFn = std::function<Endomorphism(const Endomorphism&, const Endomorphism&)>;

CheckResult check_torus_conjugation(const FieldPtr& f, std::uint32_t nvars, std::uint64_t seed,
                                    std::uint32_t samples, ComposeFn composer = {});

/// Runs the full battery over the given fields. Every check is a pure
/// function of (id, field, nvars, seed, samples); reruns with the same seed
/// produce byte-identical reports. Individual failures are data, not
/// exceptions. A coverage entry fails the suite if some construction the
/// battery is supposed to exercise lost its check.
std::vector<CheckResult> run_suite(const std::vector<FieldPtr>& fields, std::uint32_t nvars,
                                   std::uint64_t seed, std::uint32_t samples);

bool all_pass(const std::vector<CheckResult>& results);

/// Canonical JSON report (stable key order, no timing fields).
std::string render_report_json(const std::vector<CheckResult>& results,
                               const std::vector<FieldPtr>& fields, std::uint32_t nvars,
                               std::uint64_t seed, std::uint32_t samples);

/// Human-readable pass/fail table.
std::string render_summary(const std::vector<CheckResult>& results);

}  // namespace verify
}  // namespace tame
