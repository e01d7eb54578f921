#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tame/endo.hpp"
#include "tame/error.hpp"
#include "tame/gens.hpp"
#include "tame/io.hpp"
#include "tame/poly.hpp"
#include "tame/search.hpp"
#include "tame/verify.hpp"

namespace {

using namespace tame;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitConfigError = 2;

struct CommonOpts {
  std::vector<std::uint64_t> ps{3, 5, 7};
  std::uint32_t k = 1;
  std::vector<std::uint64_t> modulus;
  std::uint32_t n = 4;
  std::uint64_t seed = 0;
  std::uint32_t degree_cap = 64;
  std::string out;
};

FieldPtr single_field(const CommonOpts& opts) {
  if (opts.ps.size() != 1) {
    fail(errc::invalid_argument, "this command takes exactly one --p value");
  }
  return make_field(opts.ps[0], opts.k, opts.modulus);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail(errc::invalid_argument, "cannot open output file " + out_path);
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(errc::invalid_argument, "cannot open input file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--p", opts.ps, "field characteristic(s), odd primes");
  cmd->add_option("--k", opts.k, "extension degree");
  cmd->add_option("--modulus", opts.modulus, "modulus coefficients, low to high");
  cmd->add_option("--n", opts.n, "number of generators");
  cmd->add_option("--seed", opts.seed, "deterministic seed");
  cmd->add_option("--degree-cap", opts.degree_cap, "hard cap on intermediate degrees");
  cmd->add_option("--out", opts.out, "output file (default stdout)");
}

void require_probe_arity(std::uint32_t n) {
  if (n < 4) fail(errc::index_out_of_range, "constructions require n > 3");
}

int cmd_verify(const CommonOpts& opts, std::uint32_t samples) {
  require_probe_arity(opts.n);
  std::vector<FieldPtr> fields;
  for (auto p : opts.ps) fields.push_back(make_field(p, opts.k, opts.modulus));
  auto t0 = std::chrono::steady_clock::now();
  auto results = verify::run_suite(fields, opts.n, opts.seed, samples);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  emit(opts.out, verify::render_report_json(results, fields, opts.n, opts.seed, samples));
  std::cerr << verify::render_summary(results);
  std::cerr << "wall: " << ms << " ms\n";
  return verify::all_pass(results) ? kExitPass : kExitCheckFailure;
}

int cmd_classify(const CommonOpts& opts, const std::string& monomial_text) {
  FieldPtr f = single_field(opts);
  Monomial m = io::parse_monomial(monomial_text, opts.n);
  gens::MonomialClass cls = gens::classify_monomial(m, f->characteristic());
  std::ostringstream line;
  if (cls.good) {
    line << "Good witness x" << cls.witness_index << "^" << cls.witness_exp << "\n";
  } else {
    line << "Bad\n";
  }
  emit(opts.out, line.str());
  return kExitPass;
}

int cmd_compose(const CommonOpts& opts, const std::vector<std::string>& files) {
  if (files.size() < 2) fail(errc::invalid_argument, "compose takes at least two files");
  Endomorphism acc = io::parse_endomorphism(slurp(files[0]));
  for (std::size_t i = 1; i < files.size(); ++i) {
    acc = compose(acc, io::parse_endomorphism(slurp(files[i])));
  }
  emit(opts.out, io::render_endomorphism(acc));
  return kExitPass;
}

struct ConstructOpts {
  std::string kind;
  std::uint32_t m = 1;
  std::string b = "1";
  std::string mprime;
  std::string monomial;
  std::string lambda = "1";
  std::uint32_t pivot_i = 0;
  std::uint32_t pivot_j = 0;
};

int cmd_construct(const CommonOpts& opts, const ConstructOpts& c) {
  require_probe_arity(opts.n);
  FieldPtr f = single_field(opts);
  if (c.kind == "phi_m") {
    Scalar b = io::parse_scalar(c.b, f);
    gens::Certificate cert = gens::build_phi_m_word(b, c.m, {}, opts.n);
    Endomorphism value = eval_word(cert.word, cert.gens);
    if (value != cert.expected) fail(errc::invalid_argument, "internal: certificate drifted");
    emit(opts.out, io::render_certificate(cert.gens, cert.word, value));
    return kExitPass;
  }
  if (c.kind == "good_composite" || c.kind == "commutator") {
    Monomial mp = io::parse_monomial(c.mprime, opts.n);
    gens::Certificate cert = c.kind == "commutator"
                                 ? gens::commutator_phi1(mp, f, opts.n)
                                 : gens::good_special_composite(c.m, mp, f, opts.n);
    Endomorphism value = eval_word(cert.word, cert.gens);
    if (value != cert.expected) fail(errc::invalid_argument, "internal: certificate drifted");
    emit(opts.out, io::render_certificate(cert.gens, cert.word, value));
    return kExitPass;
  }
  if (c.kind == "delta") {
    Monomial mp = io::parse_monomial(c.mprime, opts.n);
    gens::DeltaExpansion d = gens::delta_conjugation(c.m, mp, f, opts.n);
    std::cerr << "coefficient of " << d.target_monomial.str() << ": "
              << d.coeff_of_target.str() << "\n";
    emit(opts.out, io::render_certificate(d.gens, d.word, d.delta));
    return kExitPass;
  }
  if (c.kind == "bad_to_good") {
    Monomial m = io::parse_monomial(c.monomial, opts.n);
    Scalar b = io::parse_scalar(c.b, f);
    Scalar lambda = io::parse_scalar(c.lambda, f);
    Endomorphism phi = make_elementary(1, Polynomial::monomial(b, m));
    std::optional<std::pair<std::uint32_t, std::uint32_t>> pivot;
    if (c.pivot_i || c.pivot_j) pivot = {{c.pivot_i, c.pivot_j}};
    gens::BadToGood r = gens::bad_to_good(phi, lambda, pivot);
    std::cerr << "good monomial " << r.good_monomial.str() << " coefficient "
              << r.good_coeff.str() << " (pivot " << r.pivot.first << "," << r.pivot.second
              << ")\n";
    emit(opts.out, io::render_certificate(r.gens, r.word, r.conjugated));
    return kExitPass;
  }
  fail(errc::invalid_argument, "unknown construction " + c.kind);
}

int cmd_search(const CommonOpts& opts, const std::string& target_monomial,
               const std::string& target_file, const search::SearchConfig& cfg) {
  require_probe_arity(opts.n);
  FieldPtr f = single_field(opts);
  auto t0 = std::chrono::steady_clock::now();
  std::string report;
  if (!target_monomial.empty()) {
    Monomial m = io::parse_monomial(target_monomial, opts.n);
    search::ProbeReport probe = search::rips_probe(f, opts.n, m, cfg);
    report = search::render_probe_json(probe, cfg);
  } else if (!target_file.empty()) {
    Endomorphism target = io::parse_endomorphism(slurp(target_file));
    GeneratorSet gens = search::default_generators(f, opts.n);
    search::SearchOutcome outcome = search::find_word(target, gens, cfg);
    report = search::render_outcome_json(outcome, cfg, gens, target);
  } else {
    fail(errc::invalid_argument, "search needs --target or --target-file");
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  emit(opts.out, report);
  std::cerr << "wall: " << ms << " ms\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in tame polynomial automorphism groups"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::uint32_t samples = 100;
  std::string monomial_text, target_file;
  std::vector<std::string> compose_files;
  ConstructOpts construct;
  search::SearchConfig scfg;
  std::string strategy = "bfs";

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity regression suite");
  add_common(verify_cmd, opts);
  verify_cmd->add_option("--samples", samples, "sample count per check");

  CLI::App* classify_cmd = app.add_subcommand("classify", "good/bad verdict for a monomial");
  add_common(classify_cmd, opts);
  classify_cmd->add_option("--monomial", monomial_text, "monomial, e.g. x2^2*x3")->required();

  CLI::App* compose_cmd = app.add_subcommand("compose", "compose endomorphism files");
  add_common(compose_cmd, opts);
  compose_cmd->add_option("files", compose_files, "endomorphism JSON files")->required();

  CLI::App* construct_cmd = app.add_subcommand("construct", "emit a word certificate");
  add_common(construct_cmd, opts);
  construct_cmd
      ->add_option("kind", construct.kind,
                   "phi_m | good_composite | commutator | delta | bad_to_good")
      ->required();
  construct_cmd->add_option("--m", construct.m, "power (m for phi_m, k elsewhere)");
  construct_cmd->add_option("--b", construct.b, "coefficient scalar");
  construct_cmd->add_option("--mprime", construct.mprime, "tail monomial m'");
  construct_cmd->add_option("--monomial", construct.monomial, "full monomial (bad_to_good)");
  construct_cmd->add_option("--lambda", construct.lambda, "conjugation scalar");
  construct_cmd->add_option("--pivot-i", construct.pivot_i, "pivot row index");
  construct_cmd->add_option("--pivot-j", construct.pivot_j, "pivot partner index");

  CLI::App* search_cmd = app.add_subcommand("search", "word search / reachability probe");
  add_common(search_cmd, opts);
  search_cmd->add_option("--target", monomial_text, "target monomial for x1 -> x1 + m");
  search_cmd->add_option("--target-file", target_file, "endomorphism JSON target");
  search_cmd->add_option("--max-len", scfg.max_word_length, "maximum word length");
  search_cmd->add_option("--max-deg", scfg.max_intermediate_degree, "degree prune bound");
  search_cmd->add_option("--strategy", strategy, "bfs | mitm");
  search_cmd->add_option("--workers", scfg.workers, "worker threads (1 = serial reference)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitConfigError;
  }

  try {
    set_degree_cap(opts.degree_cap);
    if (verify_cmd->parsed()) return cmd_verify(opts, samples);
    if (classify_cmd->parsed()) return cmd_classify(opts, monomial_text);
    if (compose_cmd->parsed()) return cmd_compose(opts, compose_files);
    if (construct_cmd->parsed()) return cmd_construct(opts, construct);
    if (search_cmd->parsed()) {
      if (strategy == "mitm" || strategy == "meet-in-the-middle") {
        scfg.strategy = search::Strategy::meet_in_the_middle;
      } else if (strategy == "bfs") {
        scfg.strategy = search::Strategy::bfs;
      } else {
        fail(errc::invalid_argument, "unknown strategy " + strategy);
      }
      return cmd_search(opts, monomial_text, target_file, scfg);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
