// Serial vs parallel comparison for the three heavy kernels: the symbolic
// lambda-determinant, the lambda-hyperdeterminant, and the q-Dyson constant
// term.  Before timing, each kernel's two execution paths are cross-checked
// for exact equality, so the benchmark doubles as an agreement smoke test.
//
//   ./bench_kernels                     # all benchmarks
//   ./bench_kernels --benchmark_filter=hyperdet

#include "lhd/detlib.hpp"
#include "lhd/dyson.hpp"
#include "lhd/hyper.hpp"
#include "lhd/laurent.hpp"
#include "lhd/macdonald.hpp"
#include "lhd/rational_function.hpp"

#include <benchmark/benchmark.h>

#include <cstdio>
#include <random>
#include <vector>

namespace {

using lhd::BigRational;
using lhd::Exec;
using lhd::RationalFunction;
using SymEntry = lhd::LaurentPoly<RationalFunction>;

Exec exec_of(const benchmark::State& state) {
    return state.range(0) ? Exec::parallel : Exec::serial;
}

// (x_i^{j-1}) with symbolic points: the matrix behind the deformed
// Vandermonde identity, n! monomials in the expanded result.
lhd::Matrix<SymEntry> symbolic_power_matrix(int n) {
    lhd::Matrix<SymEntry> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = (j == 0) ? lhd::Ring<SymEntry>::one()
                                  : SymEntry::variable(static_cast<std::size_t>(i), j);
    return m;
}

// Dense random hypermatrix with nonzero rational entries (zeros would be
// rejected under the -1 entries of ASM monomials).
lhd::HyperMatrix<RationalFunction> random_hypermatrix(int side, int dim, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> num(1, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    lhd::HyperMatrix<RationalFunction> a(side, dim);
    std::vector<int> idx(static_cast<std::size_t>(dim), 1);
    for (;;) {
        const long n = sign(rng) ? num(rng) : -num(rng);
        a.set(idx, RationalFunction(BigRational(n, den(rng))));
        int t = dim - 1;
        while (t >= 0 && idx[static_cast<std::size_t>(t)] == side) {
            idx[static_cast<std::size_t>(t)] = 1;
            --t;
        }
        if (t < 0) break;
        ++idx[static_cast<std::size_t>(t)];
    }
    return a;
}

const RationalFunction kQ = RationalFunction::parse("q");

void bench_det_vandermonde(benchmark::State& state) {
    const int n = static_cast<int>(state.range(1));
    const auto m = symbolic_power_matrix(n);
    for (auto _ : state) benchmark::DoNotOptimize(lhd::det_lambda(m, kQ, exec_of(state)));
}

void bench_hyperdet(benchmark::State& state) {
    const int side = static_cast<int>(state.range(1));
    const int dim = static_cast<int>(state.range(2));
    const auto a = random_hypermatrix(side, dim, 20250817u);
    const auto conv = lhd::PhiConvention::proof_consistent;
    for (auto _ : state)
        benchmark::DoNotOptimize(lhd::lambda_hyperdet(a, kQ, conv, exec_of(state)));
}

void bench_dyson(benchmark::State& state) {
    const int k = static_cast<int>(state.range(1));
    const int s = static_cast<int>(state.range(2));
    const int m = static_cast<int>(state.range(3));
    lhd::MacdonaldEngine engine;
    engine.Q(lhd::Partition(std::vector<int>(static_cast<std::size_t>(s), k)), m);  // warm the coefficient tables
    for (auto _ : state)
        benchmark::DoNotOptimize(lhd::dyson_coefficient(k, s, m, engine, exec_of(state)));
}

// One exact serial == parallel check per kernel, run before the timers.
bool agreement_checks() {
    bool ok = true;
    {
        const auto m = symbolic_power_matrix(5);
        ok &= lhd::det_lambda(m, kQ, Exec::serial) == lhd::det_lambda(m, kQ, Exec::parallel);
    }
    {
        const auto a = random_hypermatrix(3, 4, 20250817u);
        const auto conv = lhd::PhiConvention::proof_consistent;
        ok &= lhd::lambda_hyperdet(a, kQ, conv, Exec::serial) ==
              lhd::lambda_hyperdet(a, kQ, conv, Exec::parallel);
    }
    {
        lhd::MacdonaldEngine engine;
        ok &= lhd::dyson_coefficient(2, 3, 2, engine, Exec::serial) ==
              lhd::dyson_coefficient(2, 3, 2, engine, Exec::parallel);
    }
    return ok;
}

}  // namespace

BENCHMARK(bench_det_vandermonde)
    ->ArgNames({"parallel", "n"})
    ->ArgsProduct({{0, 1}, {4, 5}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK(bench_hyperdet)
    ->ArgNames({"parallel", "side", "dim"})
    ->ArgsProduct({{0, 1}, {3}, {4}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK(bench_dyson)
    ->ArgNames({"parallel", "k", "s", "m"})
    ->ArgsProduct({{0, 1}, {2}, {3}, {2}})
    ->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
    if (!agreement_checks()) {
        std::fprintf(stderr, "serial and parallel kernels disagree; not benchmarking\n");
        return 1;
    }
    std::printf("serial/parallel agreement: det n=5, hyperdet 3x3x3x3, dyson (2,3,2) all exact\n");
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
