#include <benchmark/benchmark.h>

#include "qmod/stability.hpp"
#include "qmod/subdims.hpp"
#include "qmod/torus_knot.hpp"

namespace {

// Fresh table each iteration so the whole box is recomputed.
void BM_SubdimsBipartite(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int per = static_cast<int>(state.range(1));
  const qmod::Quiver q = qmod::bipartite(p, p);
  const qmod::DimVector a(std::vector<int>(2 * p, per));
  for (auto _ : state) {
    qmod::SubdimTable table(q);
    benchmark::DoNotOptimize(table.subdims(a).size());
  }
  state.counters["box"] = static_cast<double>(qmod::box_size(a));
}
BENCHMARK(BM_SubdimsBipartite)->Args({2, 2})->Args({2, 3})->Args({3, 2});

void BM_SubdimsKronecker(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const qmod::DimVector a{m, m};
  for (auto _ : state) {
    qmod::SubdimTable table(qmod::kronecker(3));
    benchmark::DoNotOptimize(table.subdims(a).size());
  }
}
BENCHMARK(BM_SubdimsKronecker)->Arg(4)->Arg(8)->Arg(16);

void BM_TorusKnotSchofield(benchmark::State& state) {
  const auto [q, theta] = qmod::torus_knot_setting(2, 5);
  const qmod::DimVector a{2, 2, 1, 1, 1, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(qmod::is_theta_stable_dim(q, theta, a));
}
BENCHMARK(BM_TorusKnotSchofield);

}  // namespace
