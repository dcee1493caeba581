#include <benchmark/benchmark.h>

#include <random>

#include "ncode/channel.hpp"
#include "ncode/classify.hpp"
#include "ncode/decoder.hpp"
#include "ncode/ncode.hpp"

using namespace ncode;

namespace {

LinearCode random_code(std::uint64_t seed, int n, int k) {
    std::mt19937_64 rng(seed);
    while (true) {
        BitMatrix G(k, n);
        for (int r = 0; r < k; ++r) G.set_row(r, BitWord(n, rng() & ((1ull << n) - 1)));
        if (G.rank() == k) return LinearCode::from_generator(G);
    }
}

const LinearCode& ham74() {
    static const LinearCode c = hamming_code(3);
    return c;
}

}  // namespace

static void BM_StandardArrayBuild(benchmark::State& state) {
    const LinearCode c = random_code(1, static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2);
    for (auto _ : state) {
        StandardArray table(c);
        benchmark::DoNotOptimize(table.leaders().size());
    }
}
BENCHMARK(BM_StandardArrayBuild)->Arg(8)->Arg(12)->Arg(16);

static void BM_CosetDecode(benchmark::State& state) {
    const StandardArray table(ham74());
    std::mt19937_64 rng(2);
    for (auto _ : state) {
        const BitWord y(7, rng() & 0x7f);
        benchmark::DoNotOptimize(coset_decode(table, y).codeword);
    }
}
BENCHMARK(BM_CosetDecode);

static void BM_NearestNeighborDecode(benchmark::State& state) {
    const LinearCode c = random_code(3, 12, 6);
    c.codewords();  // warm the cache
    std::mt19937_64 rng(4);
    for (auto _ : state) {
        const BitWord y(12, rng() & 0xfff);
        benchmark::DoNotOptimize(nearest_neighbor_decode(c, y).codeword);
    }
}
BENCHMARK(BM_NearestNeighborDecode);

static void BM_MinDistance(benchmark::State& state) {
    for (auto _ : state) {
        const LinearCode c = hamming_code(4);  // rebuilt so the cache is cold
        benchmark::DoNotOptimize(c.min_distance());
    }
}
BENCHMARK(BM_MinDistance);

static void BM_PseudoBestApproxSearch(benchmark::State& state) {
    const LinearCode c = random_code(5, 12, 6);
    PbaOptions opts;
    opts.exhaustive = true;
    std::mt19937_64 rng(6);
    for (auto _ : state) {
        const BitWord beta(12, rng() & 0xfff);
        benchmark::DoNotOptimize(pseudo_best_approx_search(c, beta, opts).bases_tried);
    }
}
BENCHMARK(BM_PseudoBestApproxSearch);

static void BM_ClassifyAll(benchmark::State& state) {
    const NCode nc = compose({
        cyclic_from_poly(BinPoly::from_string("x^3+x+1"), 7),
        cyclic_from_poly(BinPoly::from_string("x^3+1"), 6),
        repetition_code(5),
        parity_check_code(8),
        random_code(7, 9, 4),
        random_code(8, 9, 4),
    });
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_all(nc).to_text().size());
    }
}
BENCHMARK(BM_ClassifyAll);

static void BM_BscTrials(benchmark::State& state) {
    const NCode nc = compose({repetition_code(5), ham74()});
    ChannelConfig cfg;
    cfg.seed = 9;
    cfg.trials = static_cast<int>(state.range(0));
    cfg.flip_probability = 0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials(nc, cfg).components.size());
    }
}
BENCHMARK(BM_BscTrials)->Arg(1000);

BENCHMARK_MAIN();
