#include <benchmark/benchmark.h>

#include "chd/gnb.hpp"
#include "chd/knn.hpp"
#include "chd/logistic.hpp"
#include "chd/rng.hpp"
#include "chd/tree.hpp"

namespace {

chd::Dataset synthetic(std::size_t rows, std::size_t features) {
    auto rng = chd::RngStream::derive(7, "bench-data");
    chd::Dataset d;
    for (std::size_t j = 0; j < features; ++j)
        d.feature_names.push_back("f" + std::to_string(j));
    d.rows.resize(rows, std::vector<double>(features));
    d.labels.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        double z = 0.0;
        for (std::size_t j = 0; j < features; ++j) {
            d.rows[i][j] = rng.next_double();
            z += (j % 2 ? 1.0 : -1.0) * d.rows[i][j];
        }
        d.labels[i] = (z + rng.next_double() - 0.5) > 0.0 ? 1 : 0;
    }
    return d;
}

void BM_FitTree(benchmark::State& state) {
    auto d = synthetic(static_cast<std::size_t>(state.range(0)), 15);
    chd::TreeParams hp;
    for (auto _ : state) {
        auto root = chd::fit_tree(d, hp, nullptr);
        benchmark::DoNotOptimize(root);
    }
}
BENCHMARK(BM_FitTree)->Arg(512)->Arg(2048);

void BM_FitLogistic(benchmark::State& state) {
    auto d = synthetic(2048, 15);
    chd::LogisticParams hp;
    hp.max_iters = static_cast<std::size_t>(state.range(0));
    hp.tolerance = 0.0;
    for (auto _ : state) {
        auto model = chd::fit_logistic(d, hp);
        benchmark::DoNotOptimize(model);
    }
}
BENCHMARK(BM_FitLogistic)->Arg(100)->Arg(500);

void BM_KnnQuery(benchmark::State& state) {
    auto d = synthetic(static_cast<std::size_t>(state.range(0)), 15);
    auto model = chd::fit_knn(d, 5);
    auto query = synthetic(64, 15);
    for (auto _ : state) {
        double acc = 0.0;
        for (const auto& x : query.rows) acc += model->score(x);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_KnnQuery)->Arg(1024)->Arg(4096);

void BM_FitGnb(benchmark::State& state) {
    auto d = synthetic(static_cast<std::size_t>(state.range(0)), 15);
    for (auto _ : state) {
        auto model = chd::fit_gnb(d);
        benchmark::DoNotOptimize(model);
    }
}
BENCHMARK(BM_FitGnb)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
