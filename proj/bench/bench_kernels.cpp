// Serial vs OpenMP timings for the exhaustive kernels.
//
//   bench_kernels [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "loopforge/catalog.hpp"
#include "loopforge/isotopy.hpp"
#include "loopforge/sbs.hpp"

using namespace loopforge;

namespace {

double best_of(int reps, const std::function<std::size_t()>& body, std::size_t& result) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    result = body();
    const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

void compare(const char* name, int reps, const std::function<std::size_t(Execution)>& kernel) {
  std::size_t serial_out = 0, parallel_out = 0;
  const double serial = best_of(reps, [&] { return kernel(Execution::Serial); }, serial_out);
  const double parallel = best_of(reps, [&] { return kernel(Execution::Parallel); }, parallel_out);
  std::printf("%-28s serial %10.3f ms  parallel %10.3f ms  speedup %5.2fx  %s\n", name, serial,
              parallel, serial / parallel, serial_out == parallel_out ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());

  GenerateFilters six;
  six.allow_order_6 = true;
  six.require_s_subgroup = true;
  six.nonassociative = true;
  const auto sample = generate_loops(6, six);
  std::vector<LoopTable> loops;
  for (std::size_t i = 0; i < sample.size() && loops.size() < 64; i += sample.size() / 64 + 1) {
    loops.push_back(sample[i].loop);
  }

  compare("generate_loops(6)", reps, [](Execution ex) {
    GenerateFilters f;
    f.allow_order_6 = true;
    f.execution = ex;
    return generate_loops(6, f).size();
  });

  compare("autotopism_group x64 (n=6)", reps, [&](Execution ex) {
    std::size_t total = 0;
    for (const auto& loop : loops) total += autotopism_group(loop, {10, ex}).size();
    return total;
  });

  compare("bs_group x64 (n=6)", reps, [&](Execution ex) {
    std::size_t total = 0;
    for (const auto& loop : loops) total += bs_group(loop, {10, ex}).size();
    return total;
  });

  compare("sbs_group x64 (n=6)", reps, [&](Execution ex) {
    std::size_t total = 0;
    for (const auto& loop : loops) {
      for (const auto& h : s_subgroups(loop)) total += sbs_group(SLoopContext(loop, h), {10, ex}).size();
    }
    return total;
  });

  compare("verify_theorems x64 (n=6)", reps, [&](Execution ex) {
    std::size_t total = 0;
    for (const auto& loop : loops) total += verify_theorems(loop, {10, ex}).reports.size();
    return total;
  });
  return 0;
}
