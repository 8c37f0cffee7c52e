#include <benchmark/benchmark.h>

#include "multisieve/brute.hpp"
#include "multisieve/sieve.hpp"

namespace {

using namespace multisieve;

ExplicitSet full_cube(unsigned d, unsigned k) {
    std::vector<std::string> labels(d);
    for (unsigned i = 0; i < d; ++i) labels[i] = std::to_string(i);
    return ExplicitSet::full(std::move(labels), k);
}

// distinct-tuple count: p(k) cycle-type terms
void BM_SieveDistinctTuples(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    ExplicitSet X = full_cube(5, k);
    SymmetricSetSpec spec = SymmetricSetSpec::from_explicit(X);
    for (auto _ : state) {
        Int v = count_distinct_tuples(spec);
        benchmark::DoNotOptimize(v);
    }
    state.counters["terms"] = static_cast<double>(sieve_term_count(k));
}
BENCHMARK(BM_SieveDistinctTuples)->DenseRange(3, 6);

// the same count through the classical 2^C(k,2)-term sieve
void BM_InclusionExclusionDistinctTuples(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    ExplicitSet X = full_cube(5, k);
    unsigned long long terms = 0;
    for (auto _ : state) {
        auto r = inclusion_exclusion_distinct(X);
        benchmark::DoNotOptimize(r.value);
        terms = r.terms;
    }
    state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_InclusionExclusionDistinctTuples)->DenseRange(3, 5);

void BM_CountMultisets(benchmark::State& state) {
    const unsigned k = static_cast<unsigned>(state.range(0));
    ExplicitSet X = full_cube(4, k);
    SymmetricSetSpec spec = SymmetricSetSpec::from_explicit(X);
    for (auto _ : state) {
        Int v = count_multisets(spec);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CountMultisets)->DenseRange(2, 6);

} // namespace

BENCHMARK_MAIN();
