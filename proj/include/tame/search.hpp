#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tame/endo.hpp"
#include "tame/gens.hpp"

namespace tame {
namespace search {

enum class Strategy { bfs, meet_in_the_middle };

struct SearchConfig {
  std::uint32_t max_word_length = 8;
  std::uint32_t max_intermediate_degree = 12;
  Strategy strategy = Strategy::bfs;
  /// workers <= 1 runs the serial reference expansion; > 1 runs the OpenMP
  /// kernel with that many threads. Outcomes are identical either way.
  int workers = 1;
};

struct DepthStats {
  std::uint32_t depth = 0;
  std::uint64_t frontier = 0;
  std::uint64_t pruned = 0;
  std::uint64_t dedup = 0;
};

struct SearchOutcome {
  bool found = false;
  GeneratorWord word;  // minimal length, lexicographically least by tag order
  /// No candidate was degree-pruned, so the bound-limited space was covered
  /// in full.
  bool complete = true;
  bool forward_closed = false;
  bool backward_closed = false;
  std::vector<DepthStats> forward;
  std::vector<DepthStats> backward;  // meet-in-the-middle only
  std::uint64_t pruned_total = 0;
  std::uint64_t dedup_total = 0;
};

/// The finite generating set of <GL_n(F_q), psi> used by the word search:
/// adjacent transpositions, one primitive-element diagonal, the transvection
/// x1 -> x1 + x2, and psi, with stored inverses.
GeneratorSet default_generators(const FieldPtr& f, std::uint32_t nvars);

/// Layered breadth-first (or bidirectional) search for a word evaluating to
/// the target. Deduplication is by canonical serialization; candidates whose
/// degree exceeds the configured bound are pruned and counted, making the
/// search incomplete by design. Verdicts are deterministic per config,
/// independent of the worker count.
SearchOutcome find_word(const Endomorphism& target, const GeneratorSet& gens,
                        const SearchConfig& cfg);

struct ProbeCertificate {
  std::string kind;  // "psi-direct", "psi-conjugate", "power-word"
  GeneratorSet gens;
  GeneratorWord word;
  bool verified = false;
};

struct ProbeReport {
  gens::MonomialClass classification;
  std::optional<ProbeCertificate> certificate;
  SearchOutcome outcome;
  Endomorphism target;
  std::string caveat;
};

/// Reachability probe for x1 -> x1 + m from the default generators:
/// classifies the monomial, replays a word certificate when the shape admits
/// one (single-variable powers and quadratic pairs), then searches within
/// the configured bounds. Exhaustion within bounds never claims
/// non-generation.
ProbeReport rips_probe(const FieldPtr& f, std::uint32_t nvars, const Monomial& m,
                       const SearchConfig& cfg);

/// Byte-deterministic JSON reports (no timing fields inside).
std::string render_outcome_json(const SearchOutcome& outcome, const SearchConfig& cfg,
                                const GeneratorSet& gens, const Endomorphism& target);
std::string render_probe_json(const ProbeReport& report, const SearchConfig& cfg);

}  // namespace search
}  // namespace tame
