#include <benchmark/benchmark.h>

#include "wittext/oracle.hpp"

using namespace wittext;

namespace {

PCharacter zero_chi(int64_t p, const FieldCtx& ctx) {
  WittAlgebra alg(p);
  return PCharacter(alg, ctx);
}

void BM_rref_prime_field(benchmark::State& state) {
  const int64_t p = 11;
  const int n = static_cast<int>(state.range(0));
  FieldCtx f = make_prime_field(p);
  Matrix m(f, n, n);
  int64_t seed = 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      seed = (seed * 131 + 7) % p;
      m.set(r, c, f.from_int(seed));
    }
  for (auto _ : state) {
    Matrix work = m;
    benchmark::DoNotOptimize(work.rref_in_place());
  }
}
BENCHMARK(BM_rref_prime_field)->Arg(64)->Arg(256)->Arg(512);

void BM_nullspace_extension_field(benchmark::State& state) {
  FieldCtx f = make_artin_schreier_field(5, 1);
  const int n = static_cast<int>(state.range(0));
  Matrix m(f, n / 2, n);
  int64_t seed = 3;
  for (int r = 0; r < n / 2; ++r)
    for (int c = 0; c < n; ++c) {
      seed = (seed * 29 + 11) % 25;
      m.set(r, c, f.from_coeffs({seed % 5, seed / 5}));
    }
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_nullspace_extension_field)->Arg(32)->Arg(128);

void BM_ext_full_dense(benchmark::State& state) {
  const int64_t p = state.range(0);
  FieldCtx f = make_prime_field(p);
  PCharacter chi = zero_chi(p, f);
  ModuleRep M = build_verma(chi, f.from_int(1));
  ModuleRep N = build_verma(chi, f.from_int(3));
  SolverOptions opts{SolverMode::Dense, 1 << 20};
  for (auto _ : state) benchmark::DoNotOptimize(ext_dim_full(M, N, opts).ext);
}
BENCHMARK(BM_ext_full_dense)->Arg(5)->Arg(7);

void BM_ext_full_graded(benchmark::State& state) {
  const int64_t p = state.range(0);
  FieldCtx f = make_prime_field(p);
  PCharacter chi = zero_chi(p, f);
  ModuleRep M = build_verma(chi, f.from_int(1));
  ModuleRep N = build_verma(chi, f.from_int(3));
  SolverOptions opts{SolverMode::Graded, 1 << 20};
  for (auto _ : state) benchmark::DoNotOptimize(ext_dim_full(M, N, opts).ext);
}
BENCHMARK(BM_ext_full_graded)->Arg(5)->Arg(7)->Arg(11)->Arg(13);

void BM_ext_reduced(benchmark::State& state) {
  const int64_t p = state.range(0);
  FieldCtx f = make_prime_field(p);
  PCharacter chi = zero_chi(p, f);
  FieldElement lam = f.from_int(1), lamp = f.from_int(3);
  for (auto _ : state) benchmark::DoNotOptimize(ext_dim_reduced(lam, lamp, chi).ext);
}
BENCHMARK(BM_ext_reduced)->Arg(11)->Arg(19)->Arg(31);

}  // namespace

BENCHMARK_MAIN();
