#include <benchmark/benchmark.h>

#include "bds/bdscore.hpp"
#include "bds/charkernel.hpp"
#include "bds/invariants.hpp"
#include "bds/spectrum.hpp"

using namespace bds;

namespace {

const BdsCase& e8_d8() {
  static const BdsCase c = make_case({Family::E, 8}, 1);
  return c;
}

void BM_Freudenthal_E8_Adjoint(benchmark::State& st) {
  auto e = EmbeddedDatum::whole(RootDatum::build({Family::E, 8}));
  Weight hw(8);
  hw[7] = 1;
  for (auto _ : st) {
    clear_kernel_cache();
    benchmark::DoNotOptimize(freudenthal(e, hw));
  }
}
BENCHMARK(BM_Freudenthal_E8_Adjoint)->Unit(benchmark::kMillisecond);

void BM_Tensor_B4(benchmark::State& st) {
  auto e = EmbeddedDatum::whole(RootDatum::build({Family::B, 4}));
  auto a = OrbitCharacter::irreducible(e, Weight{1, 0, 0, 1});
  auto b = OrbitCharacter::irreducible(e, Weight{0, 1, 0, 1});
  for (auto _ : st) {
    clear_kernel_cache();
    benchmark::DoNotOptimize(tensor(e, a, b));
  }
}
BENCHMARK(BM_Tensor_B4)->Unit(benchmark::kMillisecond);

// Plethysm on tau_1 of E8,D8 (the half-spin module of D7), by degree.
void BM_SymPower_E8D8(benchmark::State& st) {
  const BdsCase& c = e8_d8();
  const LeviStructure lev = levi(grade(RootDatum::build(c.g), c.nu));
  auto v = OrbitCharacter::irreducible(lev.l, c.tau1_hw);
  const int m = static_cast<int>(st.range(0));
  for (auto _ : st) {
    clear_kernel_cache();
    benchmark::DoNotOptimize(sym_power(lev.l, v, m));
  }
}
BENCHMARK(BM_SymPower_E8D8)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_InvariantScan_E7A7(benchmark::State& st) {
  const BdsCase c = make_case({Family::E, 7}, 2);
  for (auto _ : st) {
    clear_kernel_cache();
    benchmark::DoNotOptimize(first_invariant_degree(c, 7));
  }
}
BENCHMARK(BM_InvariantScan_E7A7)->Unit(benchmark::kMillisecond);

void BM_Spectrum_F4A1C3(benchmark::State& st) {
  const BdsCase c = make_case({Family::F, 4}, 1);
  const SpectrumContext ctx = spectrum_context(c);
  const int m = static_cast<int>(st.range(0));
  for (auto _ : st) {
    clear_kernel_cache();
    benchmark::DoNotOptimize(ktype_spectrum(ctx, Weight(4), 20, m));
  }
}
BENCHMARK(BM_Spectrum_F4A1C3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
