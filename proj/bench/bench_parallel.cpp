// Serial reference vs OpenMP kernels on the workloads that dominate `verify`:
// gamma over every connected graph class, and building the tree poset.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "nesto/buildset.hpp"
#include "nesto/catalog.hpp"
#include "nesto/gamma_engine.hpp"
#include "nesto/parallel.hpp"
#include "nesto/poset.hpp"

using namespace nesto;

namespace {

double seconds(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void gamma_sweep(const std::vector<LabeledGraph>& graphs, Execution exec) {
  GammaMemo memo;
  std::vector<IntPolynomial> out(graphs.size());
  for_each_index(graphs.size(), exec,
                 [&](std::size_t i) { out[i] = gamma_incremental(graphical_building_set(graphs[i]), memo); });
}

void report(const std::string& name, double serial, double parallel) {
  std::printf("%-34s serial %8.3f s   parallel %8.3f s   speedup %5.2fx\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const int graph_n = argc > 1 ? std::atoi(argv[1]) : 7;
  const int tree_n = argc > 2 ? std::atoi(argv[2]) : 9;
  std::printf("threads: %d\n", omp_get_max_threads());

  const auto graphs = connected_graph_classes(graph_n);
  report("gamma, " + std::to_string(graphs.size()) + " graphs on " + std::to_string(graph_n),
         seconds([&] { gamma_sweep(graphs, Execution::serial); }),
         seconds([&] { gamma_sweep(graphs, Execution::parallel); }));

  report("tree poset, n = " + std::to_string(tree_n),
         seconds([&] { build_poset(tree_n, Execution::serial); }),
         seconds([&] { build_poset(tree_n, Execution::parallel); }));
  return 0;
}
