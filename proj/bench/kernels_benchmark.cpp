// Copyright 2026 The natinterp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference against the OpenMP kernels on growing k-ary lattices.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>
#include <vector>

#include "natinterp/bipolar.hpp"
#include "natinterp/interpolation.hpp"
#include "natinterp/kary.hpp"
#include "natinterp/kernels.hpp"
#include "natinterp/moebius.hpp"

namespace natinterp {
namespace {

Rational draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100, 100);
  return Rational(num(rng)) / 37;
}

// k^n with k = 3 and n = state.range(0).
struct Fixture {
  explicit Fixture(int n) : lattice(3, n), rng(n) {
    for (std::size_t i = 0; i < lattice.lattice().size(); ++i) values.push_back(draw(rng));
    values[0] = 0;
  }
  KaryLattice lattice;
  std::mt19937_64 rng;
  std::vector<Rational> values;
};

std::vector<Profile> profiles_for(const KaryLattice& kl, std::mt19937_64& rng, int count) {
  std::vector<Profile> out;
  std::uniform_int_distribution<long> num(0, 60);
  for (int p = 0; p < count; ++p) {
    std::vector<Rational> f(kl.base().size());
    for (int i = 0; i < kl.n(); ++i) {
      Rational previous = 1;
      for (int l = 1; l < kl.k(); ++l) {
        Rational v = Rational(num(rng)) / 60;
        if (v > previous) v = previous;
        f[kl.element(i, l)] = v;
        previous = v;
      }
    }
    out.emplace_back(kl.base_ptr(), std::move(f));
  }
  return out;
}

template <auto Transform>
void moebius(benchmark::State& state) {
  Fixture fx(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Transform(fx.lattice.lattice(), fx.values));
  }
  state.counters["elements"] = static_cast<double>(fx.values.size());
}

template <auto Transform>
void bipolar_moebius(benchmark::State& state) {
  KaryLattice kl(3, static_cast<int>(state.range(0)));
  BipolarExtension ext(kl.lattice_ptr());
  std::mt19937_64 rng(7);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < ext.size(); ++i) values.push_back(draw(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Transform(ext, values));
  }
  state.counters["elements"] = static_cast<double>(ext.size());
}

template <auto Batch>
void batch(benchmark::State& state) {
  Fixture fx(static_cast<int>(state.range(0)));
  GeneralizedCapacity g(fx.lattice.lattice_ptr(), fx.values);
  auto profiles = profiles_for(fx.lattice, fx.rng, 2000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Batch(g, profiles));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(profiles.size()));
}

constexpr auto kSerialMoebius = &reference::moebius_transform;
constexpr auto kParallelMoebius = &kernels::moebius_transform;
constexpr auto kSerialBipolar = &reference::bipolar_moebius_transform;
constexpr auto kParallelBipolar = &kernels::bipolar_moebius_transform;
constexpr auto kSerialBatch = &reference::natural_extension_batch;
constexpr auto kParallelBatch = &kernels::natural_extension_batch;

BENCHMARK(moebius<kSerialMoebius>)->Name("moebius/serial")->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(moebius<kParallelMoebius>)->Name("moebius/openmp")->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(bipolar_moebius<kSerialBipolar>)->Name("bipolar_moebius/serial")->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(bipolar_moebius<kParallelBipolar>)->Name("bipolar_moebius/openmp")->DenseRange(2, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(batch<kSerialBatch>)->Name("natural_extension_batch/serial")->DenseRange(3, 6, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(batch<kParallelBatch>)->Name("natural_extension_batch/openmp")->DenseRange(3, 6, 3)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace natinterp

BENCHMARK_MAIN();
