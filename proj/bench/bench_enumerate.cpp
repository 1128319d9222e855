// SPDX-License-Identifier: Apache-2.0
// Deletable-set enumeration: plain mask loop vs pruned search, serial and OpenMP.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frank/exact.hpp"
#include "frank/named_graphs.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds(const std::function<void()>& f, int repeat) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> names = {"k4", "k33", "prism3", "petersen", "prism5", "heawood"};
  int repeat = 3;
  CLI::App app{"Deletable-set enumeration kernels on corpus graphs"};
  app.add_option("graphs", names, "corpus graph names");
  app.add_option("--repeat", repeat, "runs per kernel, best time kept")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  const std::vector<std::string> known = frank::corpus_names();
  for (const auto& name : names) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      std::fprintf(stderr, "unknown graph name '%s'\n", name.c_str());
      return 1;
    }
  }
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled\n");
#endif
  std::printf("%-14s %4s %12s %12s %12s %12s %6s\n", "graph", "m", "strong", "reference_s", "serial_s",
              "parallel_s", "same");
  int status = 0;
  for (const auto& name : names) {
    const frank::Multigraph g = frank::named_graph(name);
    frank::DeletableSets ref, ser, par;
    const double tr = seconds([&] { ref = frank::enumerate_deletable_sets_reference(g); }, repeat);
    const double ts = seconds([&] { ser = frank::enumerate_deletable_sets_serial(g); }, repeat);
    const double tp = seconds([&] { par = frank::enumerate_deletable_sets_parallel(g); }, repeat);
    const bool same = ref.min_mask == ser.min_mask && ser.min_mask == par.min_mask &&
                      ref.strong_orientations == ser.strong_orientations &&
                      ser.strong_orientations == par.strong_orientations;
    if (!same) status = 1;
    std::printf("%-14s %4zu %12llu %12.4f %12.4f %12.4f %6s\n", name.c_str(), g.num_edges(),
                static_cast<unsigned long long>(ref.strong_orientations), tr, ts, tp, same ? "yes" : "NO");
  }
  return status;
}
