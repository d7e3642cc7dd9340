// Compares the serial reference runner against the OpenMP runner on the
// heaviest suites and checks that both produce identical reports.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "cantor/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace cantor;

template <class F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t trials = 200;
  for (int i = 1; i + 1 < argc + 1; ++i) {
    if (i + 1 < argc && std::strcmp(argv[i], "--trials") == 0)
      trials = std::strtoull(argv[i + 1], nullptr, 10);
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (no OpenMP)\n");
#endif
  std::printf("trials per suite: %llu\n", static_cast<unsigned long long>(trials));
  std::printf("%-24s %12s %12s %8s\n", "suite", "serial ms", "parallel ms", "speedup");

  const auto f = dyadic_chain();
  const homeo s = square_homeo(f);

  bool ok = true;
  auto row = [&](const char* label, auto runner) {
    verify_report serial_rep, parallel_rep;
    const double t_serial = time_ms([&] { serial_rep = runner(run_mode::serial); });
    const double t_parallel =
        time_ms([&] { parallel_rep = runner(run_mode::parallel); });
    const bool same = serial_rep.to_string() == parallel_rep.to_string();
    ok = ok && same && serial_rep.all_pass();
    std::printf("%-24s %12.1f %12.1f %7.2fx%s\n", label, t_serial, t_parallel,
                t_serial / t_parallel, same ? "" : "  REPORTS DIFFER");
  };

  row("roundtrip/square", [&](run_mode m) { return roundtrip_suite(s, trials, 7, m); });
  row("preservation/dyadic",
      [&](run_mode m) { return preservation_suite(f, trials, 7, m); });
  row("agreement/square",
      [&](run_mode m) { return agreement_suite(s, trials, 256, 7, m); });
  row("axioms/dyadic",
      [&](run_mode m) { return filter_axiom_suite(f, trials, 7, m); });

  if (!ok) {
    std::printf("mismatch or failure detected\n");
    return 1;
  }
  return 0;
}
