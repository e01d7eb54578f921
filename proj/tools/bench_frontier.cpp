// Times the breadth-first frontier expansion with the serial reference
// against the OpenMP kernel on one bundled case and checks that the two
// reports are byte-identical.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "tame/io.hpp"
#include "tame/search.hpp"

using namespace tame;

namespace {

double run_case(const Endomorphism& target, const GeneratorSet& gens,
                search::SearchConfig cfg, int workers, std::string& report) {
  cfg.workers = workers;
  auto t0 = std::chrono::steady_clock::now();
  search::SearchOutcome outcome = search::find_word(target, gens, cfg);
  auto t1 = std::chrono::steady_clock::now();
  report = search::render_outcome_json(outcome, cfg, gens, target);
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frontier expansion benchmark: serial reference vs OpenMP kernel"};
  std::uint64_t p = 3;
  std::uint32_t n = 4;
  search::SearchConfig cfg;
  cfg.max_word_length = 6;
  cfg.max_intermediate_degree = 12;
  int workers = 0;
  std::string monomial = "x2^2*x3^2";
  app.add_option("--p", p, "field characteristic");
  app.add_option("--n", n, "number of generators");
  app.add_option("--max-len", cfg.max_word_length, "depth to explore");
  app.add_option("--max-deg", cfg.max_intermediate_degree, "degree prune bound");
  app.add_option("--workers", workers, "thread count for the parallel run (0 = hardware)");
  app.add_option("--target", monomial, "target monomial");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (workers <= 0) workers = omp_get_max_threads();
#else
  if (workers <= 0) workers = 1;
#endif
  if (workers < 2) workers = 2;  // exercise the parallel merge path regardless

  FieldPtr f = make_field(p);
  GeneratorSet gens = search::default_generators(f, n);
  Endomorphism target =
      make_elementary(1, Polynomial::monomial(Scalar::one(f), io::parse_monomial(monomial, n)));

  std::string serial_report, parallel_report;
  double serial_ms = run_case(target, gens, cfg, 1, serial_report);
  double parallel_ms = run_case(target, gens, cfg, workers, parallel_report);

  std::printf("case: p=%llu n=%u target=%s max-len=%u max-deg=%u\n",
              static_cast<unsigned long long>(p), n, monomial.c_str(), cfg.max_word_length,
              cfg.max_intermediate_degree);
  std::printf("serial reference : %10.1f ms\n", serial_ms);
  std::printf("openmp x%-2d       : %10.1f ms  (speedup %.2fx)\n", workers, parallel_ms,
              serial_ms / parallel_ms);
  if (serial_report != parallel_report) {
    std::printf("MISMATCH: parallel report differs from the serial reference\n");
    return 1;
  }
  std::printf("reports identical: yes\n");
  return 0;
}
