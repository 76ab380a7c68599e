#include <benchmark/benchmark.h>

#include <random>

#include "brc/channel.hpp"
#include "brc/decoder.hpp"
#include "brc/encoder.hpp"
#include "brc/gf2m.hpp"

namespace {

using namespace brc;

const CodeParams& flagship() {
    static const CodeParams p = CodeParams::create(64, 15, 2, 4);
    return p;
}

std::vector<FieldElement> random_elements(const GaloisField& f, std::size_t count, bool nonzero) {
    std::mt19937_64 rng(7);
    std::vector<FieldElement> out(count);
    for (auto& e : out) {
        const std::uint64_t lo = nonzero ? 1 : 0;
        e = FieldElement{static_cast<std::uint32_t>(lo + uniform_below(rng, f.size() - lo))};
    }
    return out;
}

void BM_FieldMul(benchmark::State& state) {
    const auto f = GaloisField::with_degree(static_cast<unsigned>(state.range(0)));
    const auto xs = random_elements(f, 1024, false);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.mul(xs[i & 1023], xs[(i + 1) & 1023]));
        ++i;
    }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(24);

void BM_FieldInv(benchmark::State& state) {
    const auto f = GaloisField::with_degree(static_cast<unsigned>(state.range(0)));
    const auto xs = random_elements(f, 1024, true);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(f.inv(xs[i++ & 1023]));
}
BENCHMARK(BM_FieldInv)->Arg(8)->Arg(16)->Arg(24);

void BM_FindRoots(benchmark::State& state) {
    const auto f = GaloisField::with_degree(16);
    const auto roots = random_elements(f, static_cast<std::size_t>(state.range(0)), false);
    const Poly p = Poly::from_roots(f, roots);
    for (auto _ : state) benchmark::DoNotOptimize(find_roots(f, p));
}
BENCHMARK(BM_FindRoots)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Encode(benchmark::State& state) {
    const auto& p = flagship();
    const auto z = sample_valid(p, 1).z;
    for (auto _ : state) benchmark::DoNotOptimize(encode(z, p));
}
BENCHMARK(BM_Encode)->Unit(benchmark::kMicrosecond);

void BM_Decode(benchmark::State& state) {
    const auto& p = flagship();
    const auto c = encode(sample_valid(p, 1).z, p);
    const auto kind = static_cast<StrategyKind>(state.range(0));
    const auto f = apply_adversary(c, strategy(kind, c, p, 3), p.budget());
    state.SetLabel(std::string(to_string(kind)));
    for (auto _ : state) benchmark::DoNotOptimize(decode(f, p));
}
BENCHMARK(BM_Decode)
    ->Arg(static_cast<int>(StrategyKind::Identity))
    ->Arg(static_cast<int>(StrategyKind::Random))
    ->Arg(static_cast<int>(StrategyKind::ChecksumTarget))
    ->Arg(static_cast<int>(StrategyKind::LongOmit))
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
