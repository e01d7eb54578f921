#include "tame/search.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tame/error.hpp"
#include "tame/io.hpp"
#include "tame/poly.hpp"

#include "json.hpp"

namespace tame {
namespace search {

namespace {

using nlohmann::json;

struct SearchLetter {
  std::string tag;
  int sign;                // +1 or -1
  Endomorphism step;       // appended on the right in prefix words
  Endomorphism step_back;  // its inverse, used by the backward sweep
};

std::vector<SearchLetter> build_letters(const GeneratorSet& gens) {
  if (gens.size() == 0) fail(errc::empty_generator_set, "search needs at least one generator");
  std::vector<SearchLetter> letters;
  for (const auto& e : gens.entries()) {
    letters.push_back({e.tag, +1, e.forward, e.inverse});
    if (!(e.inverse == e.forward)) letters.push_back({e.tag, -1, e.inverse, e.forward});
  }
  return letters;
}

struct Node {
  std::string key;
  std::vector<std::uint16_t> word;  // letter indices
};

Endomorphism parse_key(const std::string& key, const FieldPtr& f, std::uint32_t nvars) {
  std::vector<Polynomial> images;
  std::size_t start = 0;
  while (true) {
    std::size_t sep = key.find(" | ", start);
    std::string_view piece(key.data() + start,
                           (sep == std::string::npos ? key.size() : sep) - start);
    images.push_back(io::parse_polynomial(piece, f, nvars));
    if (sep == std::string::npos) break;
    start = sep + 3;
  }
  return Endomorphism::from_images(std::move(images));
}

struct LayerStats {
  std::uint64_t pruned = 0;
  std::uint64_t dedup = 0;
};

struct Slot {
  std::string key;
  bool pruned = false;
  bool failed = false;
  std::string error;
};

void fill_slot(Slot& slot, const Endomorphism& parent, const Endomorphism& step,
               std::uint32_t max_deg) {
  try {
    Endomorphism child = compose(parent, step);
    if (child.degree() > static_cast<int>(max_deg)) {
      slot.pruned = true;
    } else {
      slot.key = child.canonical_key();
    }
  } catch (const error& e) {
    if (e.code() == errc::degree_cap_exceeded) {
      slot.pruned = true;  // over the hard cap is over the search bound too
    } else {
      slot.failed = true;
      slot.error = e.what();
    }
  }
}

/// Serial reference expansion of one depth layer: children are produced in
/// candidate order ((parent, letter) for prefix words, (letter, parent) for
/// suffix words) and first occurrence wins, which keeps the stored word per
/// state lexicographically least among minimal words.
std::vector<Node> expand_layer_serial(const std::vector<Node>& layer,
                                      const std::vector<SearchLetter>& letters, bool backward,
                                      const FieldPtr& f, std::uint32_t nvars,
                                      std::uint32_t max_deg,
                                      std::unordered_set<std::string>& visited,
                                      LayerStats& stats) {
  const std::size_t nl = letters.size();
  std::vector<Node> next;
  auto emit = [&](const Node& parent, std::size_t li, Slot& slot) {
    if (slot.failed) throw error(errc::invalid_argument, slot.error);
    if (slot.pruned) {
      ++stats.pruned;
      return;
    }
    if (!visited.insert(slot.key).second) {
      ++stats.dedup;
      return;
    }
    Node child;
    child.key = std::move(slot.key);
    if (backward) {
      child.word.reserve(parent.word.size() + 1);
      child.word.push_back(static_cast<std::uint16_t>(li));
      child.word.insert(child.word.end(), parent.word.begin(), parent.word.end());
    } else {
      child.word = parent.word;
      child.word.push_back(static_cast<std::uint16_t>(li));
    }
    next.push_back(std::move(child));
  };

  if (!backward) {
    for (const auto& parent : layer) {
      Endomorphism state = parse_key(parent.key, f, nvars);
      for (std::size_t li = 0; li < nl; ++li) {
        Slot slot;
        fill_slot(slot, state, letters[li].step, max_deg);
        emit(parent, li, slot);
      }
    }
  } else {
    for (std::size_t li = 0; li < nl; ++li) {
      for (const auto& parent : layer) {
        Endomorphism state = parse_key(parent.key, f, nvars);
        Slot slot;
        fill_slot(slot, state, letters[li].step_back, max_deg);
        emit(parent, li, slot);
      }
    }
  }
  return next;
}

/// OpenMP kernel: compose/serialize in parallel into fixed slots, then merge
/// serially in the same candidate order as the reference. Observationally
/// identical to expand_layer_serial for every thread count.
std::vector<Node> expand_layer_parallel(const std::vector<Node>& layer,
                                        const std::vector<SearchLetter>& letters, bool backward,
                                        const FieldPtr& f, std::uint32_t nvars,
                                        std::uint32_t max_deg, int workers,
                                        std::unordered_set<std::string>& visited,
                                        LayerStats& stats) {
  const std::size_t np = layer.size();
  const std::size_t nl = letters.size();
  std::vector<Node> next;

  auto merge_slot = [&](const Node& parent, std::size_t li, Slot& slot) {
    if (slot.failed) throw error(errc::invalid_argument, slot.error);
    if (slot.pruned) {
      ++stats.pruned;
      return;
    }
    if (!visited.insert(slot.key).second) {
      ++stats.dedup;
      return;
    }
    Node child;
    child.key = std::move(slot.key);
    if (backward) {
      child.word.reserve(parent.word.size() + 1);
      child.word.push_back(static_cast<std::uint16_t>(li));
      child.word.insert(child.word.end(), parent.word.begin(), parent.word.end());
    } else {
      child.word = parent.word;
      child.word.push_back(static_cast<std::uint16_t>(li));
    }
    next.push_back(std::move(child));
  };

  if (!backward) {
    // chunked by parents so the slot buffer stays bounded
    constexpr std::size_t kChunk = 2048;
    std::vector<Slot> slots;
    for (std::size_t cs = 0; cs < np; cs += kChunk) {
      const std::size_t ce = std::min(np, cs + kChunk);
      slots.assign((ce - cs) * nl, Slot{});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
#endif
      for (std::int64_t pi = static_cast<std::int64_t>(cs); pi < static_cast<std::int64_t>(ce);
           ++pi) {
        Endomorphism state = parse_key(layer[pi].key, f, nvars);
        for (std::size_t li = 0; li < nl; ++li) {
          fill_slot(slots[(pi - cs) * nl + li], state, letters[li].step, max_deg);
        }
      }
      for (std::size_t pi = cs; pi < ce; ++pi) {
        for (std::size_t li = 0; li < nl; ++li) {
          merge_slot(layer[pi], li, slots[(pi - cs) * nl + li]);
        }
      }
    }
  } else {
    // letter-major candidate order; one letter's slots at a time
    std::vector<Slot> slots;
    for (std::size_t li = 0; li < nl; ++li) {
      slots.assign(np, Slot{});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(workers)
#endif
      for (std::int64_t pi = 0; pi < static_cast<std::int64_t>(np); ++pi) {
        Endomorphism state = parse_key(layer[pi].key, f, nvars);
        fill_slot(slots[pi], state, letters[li].step_back, max_deg);
      }
      for (std::size_t pi = 0; pi < np; ++pi) merge_slot(layer[pi], li, slots[pi]);
    }
  }
  return next;
}

std::vector<Node> expand_layer(const std::vector<Node>& layer,
                               const std::vector<SearchLetter>& letters, bool backward,
                               const FieldPtr& f, std::uint32_t nvars, std::uint32_t max_deg,
                               int workers, std::unordered_set<std::string>& visited,
                               LayerStats& stats) {
  if (workers > 1) {
    return expand_layer_parallel(layer, letters, backward, f, nvars, max_deg, workers, visited,
                                 stats);
  }
  return expand_layer_serial(layer, letters, backward, f, nvars, max_deg, visited, stats);
}

GeneratorWord ids_to_word(const std::vector<std::uint16_t>& ids,
                          const std::vector<SearchLetter>& letters) {
  GeneratorWord w;
  w.reserve(ids.size());
  for (auto id : ids) w.push_back({letters[id].tag, letters[id].sign});
  return w;
}

void validate_config(const SearchConfig& cfg) {
  if (cfg.max_word_length < 1) fail(errc::invalid_argument, "max word length must be positive");
  if (cfg.max_intermediate_degree < 1) {
    fail(errc::invalid_argument, "max intermediate degree must be positive");
  }
  if (cfg.max_intermediate_degree > degree_cap()) {
    fail(errc::invalid_argument, "search degree bound exceeds the polynomial degree cap");
  }
}

void accumulate(SearchOutcome& out) {
  out.pruned_total = 0;
  out.dedup_total = 0;
  for (const auto& s : out.forward) {
    out.pruned_total += s.pruned;
    out.dedup_total += s.dedup;
  }
  for (const auto& s : out.backward) {
    out.pruned_total += s.pruned;
    out.dedup_total += s.dedup;
  }
  out.complete = out.pruned_total == 0;
}

void check_soundness(const SearchOutcome& out, const GeneratorSet& gens,
                     const Endomorphism& target) {
  if (!out.found) return;
  if (!(eval_word(out.word, gens) == target)) {
    fail(errc::invalid_argument, "internal: found word does not evaluate to the target");
  }
}

SearchOutcome bfs_search(const Endomorphism& target, const GeneratorSet& gens,
                         const SearchConfig& cfg, const std::vector<SearchLetter>& letters) {
  const FieldPtr& f = gens.field();
  const std::uint32_t n = gens.nvars();
  SearchOutcome out;
  const std::string target_key = target.canonical_key();
  std::unordered_set<std::string> visited;
  std::vector<Node> layer{{Endomorphism::identity(f, n).canonical_key(), {}}};
  visited.insert(layer[0].key);
  out.forward.push_back({0, 1, 0, 0});
  if (layer[0].key == target_key) {
    out.found = true;
    accumulate(out);
    return out;
  }
  for (std::uint32_t depth = 1; depth <= cfg.max_word_length; ++depth) {
    LayerStats ls;
    std::vector<Node> next = expand_layer(layer, letters, false, f, n,
                                          cfg.max_intermediate_degree, cfg.workers, visited, ls);
    out.forward.push_back({depth, next.size(), ls.pruned, ls.dedup});
    for (const auto& node : next) {
      if (node.key == target_key) {
        out.found = true;
        out.word = ids_to_word(node.word, letters);
        break;
      }
    }
    if (out.found) break;
    if (next.empty()) {
      out.forward_closed = true;
      break;
    }
    layer = std::move(next);
  }
  accumulate(out);
  check_soundness(out, gens, target);
  return out;
}

SearchOutcome mitm_search(const Endomorphism& target, const GeneratorSet& gens,
                          const SearchConfig& cfg, const std::vector<SearchLetter>& letters) {
  const FieldPtr& f = gens.field();
  const std::uint32_t n = gens.nvars();
  SearchOutcome out;
  const std::uint32_t half_fwd = (cfg.max_word_length + 1) / 2;
  const std::uint32_t half_bwd = cfg.max_word_length - half_fwd;

  std::unordered_set<std::string> visited_f, visited_b;
  std::vector<std::vector<Node>> fwd, bwd;
  fwd.push_back({{Endomorphism::identity(f, n).canonical_key(), {}}});
  bwd.push_back({{target.canonical_key(), {}}});
  visited_f.insert(fwd[0][0].key);
  visited_b.insert(bwd[0][0].key);
  out.forward.push_back({0, 1, 0, 0});
  out.backward.push_back({0, 1, 0, 0});

  // key -> index maps per backward layer, built as layers appear
  std::vector<std::unordered_map<std::string, std::size_t>> bwd_index;
  auto index_of = [&](std::size_t depth) -> const std::unordered_map<std::string, std::size_t>& {
    while (bwd_index.size() <= depth) {
      std::unordered_map<std::string, std::size_t> m;
      const auto& nodes = bwd[bwd_index.size()];
      for (std::size_t i = 0; i < nodes.size(); ++i) m.emplace(nodes[i].key, i);
      bwd_index.push_back(std::move(m));
    }
    return bwd_index[depth];
  };

  for (std::uint32_t total = 0; total <= cfg.max_word_length; ++total) {
    const std::uint32_t a = std::min(total, half_fwd);
    const std::uint32_t b = total - a;
    if (b > half_bwd) break;
    while (fwd.size() <= a && !out.forward_closed) {
      LayerStats ls;
      std::vector<Node> next =
          expand_layer(fwd.back(), letters, false, f, n, cfg.max_intermediate_degree, cfg.workers,
                       visited_f, ls);
      out.forward.push_back(
          {static_cast<std::uint32_t>(fwd.size()), next.size(), ls.pruned, ls.dedup});
      if (next.empty()) out.forward_closed = true;
      fwd.push_back(std::move(next));
    }
    while (bwd.size() <= b && !out.backward_closed) {
      LayerStats ls;
      std::vector<Node> next =
          expand_layer(bwd.back(), letters, true, f, n, cfg.max_intermediate_degree, cfg.workers,
                       visited_b, ls);
      out.backward.push_back(
          {static_cast<std::uint32_t>(bwd.size()), next.size(), ls.pruned, ls.dedup});
      if (next.empty()) out.backward_closed = true;
      bwd.push_back(std::move(next));
    }
    if (a >= fwd.size() || b >= bwd.size() || fwd[a].empty() || bwd[b].empty()) continue;

    const auto& bmap = index_of(b);
    std::optional<std::vector<std::uint16_t>> best;
    for (const auto& node : fwd[a]) {
      auto it = bmap.find(node.key);
      if (it == bmap.end()) continue;
      std::vector<std::uint16_t> candidate = node.word;
      const auto& suffix = bwd[b][it->second].word;
      candidate.insert(candidate.end(), suffix.begin(), suffix.end());
      if (!best || candidate < *best) best = std::move(candidate);
    }
    if (best) {
      out.found = true;
      out.word = ids_to_word(*best, letters);
      break;
    }
    if (out.forward_closed && out.backward_closed &&
        total >= (fwd.size() - 1) + (bwd.size() - 1)) {
      break;
    }
  }
  accumulate(out);
  check_soundness(out, gens, target);
  return out;
}

}  // namespace

GeneratorSet default_generators(const FieldPtr& f, std::uint32_t nvars) {
  if (!f->is_finite()) fail(errc::infinite_field, "the word search runs over finite fields");
  if (nvars < 4) fail(errc::index_out_of_range, "the generating set needs n >= 4");
  GeneratorSet set(f, nvars);
  for (std::uint32_t i = 1; i < nvars; ++i) {
    Matrix m = Matrix::identity(f, nvars);
    m.set(i - 1, i - 1, Scalar::zero(f));
    m.set(i, i, Scalar::zero(f));
    m.set(i - 1, i, Scalar::one(f));
    m.set(i, i - 1, Scalar::one(f));
    set.add("s" + std::to_string(i) + std::to_string(i + 1), make_linear(m));
  }
  Scalar g = primitive_element(f);
  if (g.is_one()) fail(errc::field_too_small, "no primitive element distinct from 1");
  std::vector<Scalar> diag(nvars, Scalar::one(f));
  diag[0] = g;
  set.add("d1", make_linear(Matrix::diagonal(diag)));
  set.add("t12", make_elementary(1, Polynomial::variable(f, nvars, 2)));
  set.add("psi", gens::psi(f, nvars));
  return set;
}

SearchOutcome find_word(const Endomorphism& target, const GeneratorSet& gens,
                        const SearchConfig& cfg) {
  validate_config(cfg);
  if (target.nvars() != gens.nvars() || !target.field()->same_as(*gens.field())) {
    fail(errc::arity_mismatch, "target does not match the generator set");
  }
  if (!target.is_origin_preserving()) {
    fail(errc::invalid_argument, "target must be origin-preserving");
  }
  if (target.degree() > static_cast<int>(cfg.max_intermediate_degree)) {
    fail(errc::degree_cap_exceeded, "target degree exceeds the search bound");
  }
  std::vector<SearchLetter> letters = build_letters(gens);
  if (cfg.strategy == Strategy::meet_in_the_middle) {
    return mitm_search(target, gens, cfg, letters);
  }
  return bfs_search(target, gens, cfg, letters);
}

namespace {

std::optional<ProbeCertificate> try_certificate(const FieldPtr& f, std::uint32_t nvars,
                                                const Monomial& m, const Endomorphism& target) {
  std::vector<std::uint32_t> present;
  for (std::uint32_t i = 2; i <= nvars; ++i) {
    if (m.exp(i) > 0) present.push_back(i);
  }
  ProbeCertificate cert;
  if (present.size() == 1) {
    // x1 -> x1 + x_j^k comes from the transvection/psi power recursion
    std::uint32_t j = present[0];
    std::uint32_t aux = 2;
    while (aux == j || aux == 1) ++aux;
    if (aux > nvars) return std::nullopt;
    gens::Certificate c =
        gens::build_phi_m_word(Scalar::one(f), m.exp(j), {j, aux, 1}, nvars);
    cert.kind = "power-word";
    cert.gens = std::move(c.gens);
    cert.word = std::move(c.word);
  } else if (present.size() == 2 && m.degree() == 2) {
    std::uint32_t j = present[0], k = present[1];
    if (j == 2 && k == 3) {
      GeneratorSet gs(f, nvars);
      gs.add("psi", gens::psi(f, nvars));
      cert.kind = "psi-direct";
      cert.gens = std::move(gs);
      cert.word = {{"psi", 1}};
    } else {
      // conjugate psi by the permutation sending (2,3) to (j,k)
      std::vector<std::uint32_t> image(nvars + 1, 0);
      image[1] = 1;
      image[2] = j;
      image[3] = k;
      std::vector<bool> used(nvars + 1, false);
      used[1] = used[j] = used[k] = true;
      std::uint32_t free_slot = 2;
      for (std::uint32_t i = 4; i <= nvars; ++i) {
        while (used[free_slot]) ++free_slot;
        image[i] = free_slot;
        used[free_slot] = true;
      }
      Matrix perm(f, nvars);
      for (std::uint32_t i = 1; i <= nvars; ++i) perm.set(image[i] - 1, i - 1, Scalar::one(f));
      GeneratorSet gs(f, nvars);
      gs.add("L", make_linear(perm));
      gs.add("psi", gens::psi(f, nvars));
      cert.kind = "psi-conjugate";
      cert.gens = std::move(gs);
      cert.word = {{"L", 1}, {"psi", 1}, {"L", -1}};
    }
  } else {
    return std::nullopt;
  }
  cert.verified = eval_word(cert.word, cert.gens) == target;
  return cert;
}

}  // namespace

ProbeReport rips_probe(const FieldPtr& f, std::uint32_t nvars, const Monomial& m,
                       const SearchConfig& cfg) {
  if (m.nvars() != nvars) fail(errc::arity_mismatch, "monomial arity mismatch");
  if (m.degree() < 2) fail(errc::invalid_argument, "probe monomials must have degree >= 2");
  ProbeReport report;
  report.classification = gens::classify_monomial(m, f->characteristic());
  report.target = make_elementary(1, Polynomial::monomial(Scalar::one(f), m));
  report.certificate = try_certificate(f, nvars, m, report.target);
  report.outcome = find_word(report.target, default_generators(f, nvars), cfg);
  report.caveat =
      "Reachability over a finite field transfers in neither direction to the "
      "infinite-field question; Found shows membership for this field only, and "
      "Exhausted within bounds is not evidence of non-generation.";
  return report;
}

namespace {

json stats_json(const std::vector<DepthStats>& stats) {
  json arr = json::array();
  for (const auto& s : stats) {
    arr.push_back({{"depth", s.depth}, {"frontier", s.frontier}, {"pruned", s.pruned},
                   {"dedup", s.dedup}});
  }
  return arr;
}

// the worker count is an execution detail, not part of the outcome: reports
// must be byte-identical for any --workers value, so it is not echoed here
json config_json(const SearchConfig& cfg) {
  return {{"max_word_length", cfg.max_word_length},
          {"max_intermediate_degree", cfg.max_intermediate_degree},
          {"strategy", cfg.strategy == Strategy::bfs ? "bfs" : "mitm"},
          {"degree_cap", degree_cap()}};
}

json outcome_to_json(const SearchOutcome& outcome, const SearchConfig& cfg,
                     const GeneratorSet& gens, const Endomorphism& target) {
  json j;
  j["config"] = config_json(cfg);
  j["field"] = json::parse(io::field_json(gens.field()));
  j["nvars"] = gens.nvars();
  json tags = json::array();
  for (const auto& e : gens.entries()) tags.push_back(e.tag);
  j["generators"] = std::move(tags);
  json target_images = json::array();
  for (const auto& img : target.images()) target_images.push_back(img.str());
  j["target"] = std::move(target_images);
  j["verdict"] = outcome.found ? "found" : "exhausted";
  if (outcome.found) {
    j["word"] = json::parse(io::render_word(outcome.word));
    j["word_length"] = outcome.word.size();
  }
  j["complete"] = outcome.complete;
  j["forward_closed"] = outcome.forward_closed;
  j["backward_closed"] = outcome.backward_closed;
  j["stats"] = {{"forward", stats_json(outcome.forward)},
                {"backward", stats_json(outcome.backward)}};
  j["totals"] = {{"pruned", outcome.pruned_total}, {"dedup", outcome.dedup_total}};
  return j;
}

}  // namespace

std::string render_outcome_json(const SearchOutcome& outcome, const SearchConfig& cfg,
                                const GeneratorSet& gens, const Endomorphism& target) {
  return outcome_to_json(outcome, cfg, gens, target).dump(2) + "\n";
}

std::string render_probe_json(const ProbeReport& report, const SearchConfig& cfg) {
  json j;
  j["classification"] = {{"verdict", report.classification.good ? "good" : "bad"},
                         {"p", report.classification.p},
                         {"monomial", report.classification.monomial.str()}};
  if (report.classification.good) {
    j["classification"]["witness_index"] = report.classification.witness_index;
    j["classification"]["witness_exp"] = report.classification.witness_exp;
  }
  if (report.certificate) {
    json c;
    c["kind"] = report.certificate->kind;
    c["word"] = json::parse(io::render_word(report.certificate->word));
    c["word_length"] = report.certificate->word.size();
    c["verified"] = report.certificate->verified;
    json g;
    for (const auto& e : report.certificate->gens.entries()) {
      json images = json::array();
      for (const auto& img : e.forward.images()) images.push_back(img.str());
      g[e.tag] = std::move(images);
    }
    c["generators"] = std::move(g);
    j["certificate"] = std::move(c);
  }
  // the default generator set is reconstructible from the config; re-render
  GeneratorSet gens = default_generators(report.target.field(), report.target.nvars());
  j["search"] = outcome_to_json(report.outcome, cfg, gens, report.target);
  j["caveat"] = report.caveat;
  return j.dump(2) + "\n";
}

}  // namespace search
}  // namespace tame
