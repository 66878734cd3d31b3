#include <benchmark/benchmark.h>

#include "llpack/classify.hpp"
#include "llpack/smallgrp.hpp"

using namespace llpack;

namespace {

gf::FieldPtr field_of(long long q) {
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int e = 0;
    for (long long r = q; r > 1; r /= p) ++e;
    auto f = gf::Field::prime(p);
    return e > 1 ? f->extension(e) : f;
}

void BM_enumerate_self_dual(benchmark::State& state) {
    auto f = field_of(state.range(0));
    for (auto _ : state) {
        auto polys = poly::enumerate_self_dual_irreducible(f, static_cast<int>(state.range(1)),
                                                           poly::DualityKind::plain(), false);
        benchmark::DoNotOptimize(polys);
    }
}
BENCHMARK(BM_enumerate_self_dual)->Args({7, 2})->Args({7, 4})->Args({9, 4});

void BM_enumerate_solution_set(benchmark::State& state) {
    auto space = sg::ClassicalSpace::make(sg::SpaceKind::Sp2, gf::Field::prime(state.range(0)));
    for (auto _ : state) {
        auto pairs = sg::enumerate_S(space, true);
        benchmark::DoNotOptimize(pairs);
    }
}
BENCHMARK(BM_enumerate_solution_set)->Arg(3)->Arg(7)->Arg(13);

void BM_group_elements(benchmark::State& state) {
    auto field = gf::Field::prime(state.range(0));
    for (auto _ : state) {
        auto space = sg::ClassicalSpace::make(sg::SpaceKind::Sp2, field);
        auto elems = sg::group_elements(space);
        benchmark::DoNotOptimize(elems);
    }
}
BENCHMARK(BM_group_elements)->Arg(5)->Arg(11);

void BM_d_sum(benchmark::State& state) {
    auto space = sg::ClassicalSpace::make(sg::SpaceKind::Sp2, gf::Field::prime(state.range(0)));
    for (auto _ : state) {
        auto d = sg::d_sum(space, sg::GlChar::Omega, +1, true);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_d_sum)->Arg(3)->Arg(7);

void BM_packet_table(benchmark::State& state) {
    cls::GridBounds bounds;
    bounds.max_m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto rows = cls::packet_table(cusp::Family::Symplectic, bounds);
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(BM_packet_table)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
