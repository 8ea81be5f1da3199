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


// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Values are compared exactly unless stated otherwise.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "natinterp/error.hpp"
#include "support/support.hpp"

namespace natinterp {
namespace {

using testing::q;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      detail << "failed: " << what << "; ";
    }
  }
};

// A random linear extension (Kahn's algorithm with uniform choice).
std::vector<Poset::Index> random_linear_extension(testing::Rng& rng, const Poset& p) {
  std::vector<std::size_t> pending(p.size());
  std::vector<Poset::Index> ready, order;
  for (std::size_t j = 0; j < p.size(); ++j) {
    pending[j] = p.lower_covers(j).size();
    if (pending[j] == 0) ready.push_back(j);
  }
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    std::size_t at = pick(rng);
    Poset::Index j = ready[at];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(at));
    order.push_back(j);
    for (Poset::Index up : p.upper_covers(j)) {
      if (--pending[up] == 0) ready.push_back(up);
    }
  }
  return order;
}

std::string node_of(const KaryLattice& kl, Downset x) { return node_label(kl.node_of(x)); }

// 1. Unipolar worked example on the 3x2 grid.
void unipolar_golden(Outcome& out) {
  KaryLattice kl(3, 2);
  // F(a,b) = (a² + 2b + ab) / 12.
  std::vector<Rational> values;
  for (Downset x : kl.lattice().elements()) {
    KaryNode n = kl.node_of(x);
    values.push_back(Rational(n[0] * n[0] + 2 * n[1] + n[0] * n[1]) / 12);
  }
  GeneralizedCapacity g(kl.lattice_ptr(), values);

  auto start = Clock::now();
  Profile f(kl.base_ptr(), {q("0.5"), q("0.1"), q("0.3"), q("0.2")});
  ChainDecomposition d = triangulate(f);
  Rational value = evaluate_on_chain(g, d);
  double elapsed = ms_since(start);

  std::vector<std::string> nodes;
  for (Downset x : d.chain) nodes.push_back(node_of(kl, x));
  out.require(nodes == std::vector<std::string>{"(0,0)", "(1,0)", "(1,1)", "(1,2)", "(2,2)"},
              "chain");
  out.require(d.weights == std::vector<Rational>{q("0.5"), q("0.2"), q("0.1"), q("0.1"),
                                                 q("0.1")},
              "weights");
  Rational by_hand = q("0.2") * g.value(kl.downset_of({1, 0})) +
                     q("0.1") * g.value(kl.downset_of({1, 1})) +
                     q("0.1") * g.value(kl.downset_of({1, 2})) +
                     q("0.1") * g.value(kl.downset_of({2, 2}));
  out.require(value == by_hand, "value");
  out.require(elapsed < 1.0, "time budget");
  out.detail << "chain (0,0)<(1,0)<(1,1)<(1,2)<(2,2), alpha = 1/2 1/5 1/10 1/10 1/10, value "
             << to_string(value) << ", " << elapsed << " ms";
}

// 2. Bipolar worked example on the 3x2 grid.
void bipolar_golden(Outcome& out) {
  KaryLattice kl(3, 2);
  testing::Rng rng(2);
  BipolarCapacity v = testing::random_bipolar_capacity(rng, kl.lattice_ptr());
  BipolarProfile f(kl.base_ptr(), {q("0.5"), q("0.1"), q("-0.3"), q("-0.2")});
  BipolarEvaluation e = bipolar_natural_extension_detailed(v, f);
  out.require(e.tile == kl.complemented({0}), "tile");
  std::vector<std::string> vertices;
  for (const auto& b : e.vertices) vertices.push_back(node_of(kl, b.pos) + node_of(kl, b.neg));
  out.require(vertices == std::vector<std::string>{"(0,0)(0,0)", "(1,0)(0,0)", "(1,0)(0,1)",
                                                   "(1,0)(0,2)", "(2,0)(0,2)"},
              "vertices");
  out.require(e.decomposition.weights ==
                  std::vector<Rational>{q("0.5"), q("0.2"), q("0.1"), q("0.1"), q("0.1")},
              "weights");
  auto at = [&](KaryNode p, KaryNode n) { return v.value(kl.bipolar_of(p, n)); };
  Rational by_hand = q("0.2") * at({1, 0}, {0, 0}) + q("0.1") * at({1, 0}, {0, 1}) +
                     q("0.1") * at({1, 0}, {0, 2}) + q("0.1") * at({2, 0}, {0, 2});
  out.require(e.value == by_hand, "value");
  out.detail << "tile A={1}, vertices (10,00) (10,01) (10,02) (20,02) with 1/5 1/10 1/10 1/10";
}

// 3. Tile coverage of the bipolar extension.
void structure(Outcome& out) {
  auto wedge = testing::lattice_of(testing::wedge_poset());
  BipolarExtension ext(wedge);
  auto tiles = tile_union(*wedge);
  const Poset& p = wedge->base();
  Downset a = Downset::singleton(p.index_of("a")), c = Downset::singleton(p.index_of("c"));
  out.require(!is_regular_mosaic(p), "two-bottom base flagged");
  out.require(ext.size() == 11, "11 elements");
  out.require(ext.contains({a, c}) && ext.contains({c, a}), "(a,c) and (c,a) present");
  out.require(tiles.size() == 9, "9 in the tile union");
  out.require(!std::binary_search(tiles.begin(), tiles.end(), BipolarElement{a, c}) &&
                  !std::binary_search(tiles.begin(), tiles.end(), BipolarElement{c, a}),
              "witnesses outside the tiles");
  int checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto lattice = testing::lattice_of(testing::antichain(n));
    out.require(tile_union(*lattice).size() == BipolarExtension(lattice).size(), "2^N coverage");
    ++checked;
  }
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 3; ++n) {
      KaryLattice kl(k, n);
      auto union_elements = tile_union(kl.lattice());
      BipolarExtension full(kl.lattice_ptr());
      std::vector<BipolarElement> all(full.elements());
      std::sort(all.begin(), all.end());
      out.require(union_elements == all, "k^n coverage");
      ++checked;
    }
  }
  out.detail << "two-bottom base: |L~| = 11, |union| = 9, outside (a,c) (c,a); " << checked
             << " regular lattices covered exactly";
}

std::shared_ptr<const Poset> small_base(testing::Rng& rng, int round, bool mosaic) {
  switch (round % 4) {
    case 0: return testing::antichain(1 + round % 4);
    case 1: return build_kary_base(2 + round % 3, 1 + (round / 4) % 3);
    case 2: return mosaic ? testing::random_mosaic_forest(rng, 1 + round % 4)
                          : testing::random_poset(rng, 1 + round % 4);
    default: return mosaic ? testing::random_mosaic_forest(rng, 2 + round % 3)
                           : testing::wedge_poset();
  }
}

// 4. Möbius-form and max-min evaluations against the natural extension.
void oracle_equivalence(Outcome& out) {
  testing::Rng rng(4);
  auto start = Clock::now();
  const int rounds = 300;
  for (int round = 0; round < rounds; ++round) {
    auto lattice = testing::lattice_of(small_base(rng, round, false));
    GeneralizedCapacity g = testing::random_capacity(rng, lattice, round % 2 == 0);
    Profile f = testing::random_profile(rng, lattice->base_ptr(), 12, round % 3 == 0);
    out.require(moebius_form_eval(moebius_transform(g), f) == natural_extension(g, f),
                "moebius form");
    GeneralizedCapacity z = testing::random_zero_one(rng, lattice);
    out.require(zero_one_maxmin(z, f) == natural_extension(z, f), "max-min");
  }
  for (int round = 0; round < rounds; ++round) {
    auto lattice = testing::lattice_of(small_base(rng, round, true));
    auto ext = std::make_shared<const BipolarExtension>(lattice);
    BipolarCapacity v = testing::random_bipolar_capacity(rng, lattice, round % 2 == 0);
    BipolarProfile f = testing::random_bipolar_profile(rng, lattice->base_ptr(), 12, round % 3);
    out.require(bipolar_moebius_form_eval(bipolar_moebius_transform(v.to_function(ext)), f) ==
                    bipolar_natural_extension(v, f),
                "bipolar moebius form");
  }
  double elapsed = ms_since(start);
  out.require(elapsed < 30000, "time budget");
  out.detail << rounds << " instances each for unipolar, max-min and bipolar, " << elapsed / 1000
             << " s";
}

// 5. Boolean and two-level collapses.
void reductions(Outcome& out) {
  testing::Rng rng(5);
  int count = 0;
  for (int round = 0; round < 200; ++round) {
    int n = 1 + round % 4;
    KaryLattice kl(2, n);
    GeneralizedCapacity g = testing::random_capacity(rng, kl.lattice_ptr(), true);
    Profile f = testing::random_profile(rng, kl.base_ptr());
    out.require(kary_choquet(kl, g, f).value == choquet_classical(g, f.values()),
                "k=2 unipolar");

    auto ext = std::make_shared<const BipolarExtension>(kl.lattice_ptr());
    BipolarCapacity v = testing::random_bipolar_capacity(rng, kl.lattice_ptr());
    BipolarFunction vf = v.to_function(ext);
    std::vector<Rational> scores;
    for (int i = 0; i < n; ++i) scores.push_back(testing::random_rational(rng, -1, 1, 20));
    BipolarProfile bf(kl.base_ptr(), scores);
    // The integral of |f| for the game C -> v(C ∩ N⁺, C ∩ N⁻), written out.
    Downset positive;
    for (int i = 0; i < n; ++i) {
      if (scores[i] >= 0) positive |= Downset::singleton(i);
    }
    std::vector<Rational> magnitude = bf.magnitude().values();
    Rational expansion = testing::oracle_choquet(
        [&](Downset c) { return vf.value({c & positive, c.minus(positive)}); }, magnitude);
    out.require(bipolar_kary_choquet(kl, v, bf).value == expansion, "k=2 bipolar");
    out.require(bicapacity_choquet(vf, scores) == expansion, "bicapacity expansion");
    out.require(bipolar_natural_extension(v, bf) == bicapacity_choquet(vf, scores),
                "Boolean bipolar");
    ++count;
  }
  out.detail << count << " draws with n <= 4, differences exactly 0";
}

// 6. Mesh formulas against the integrals on staircase profiles.
void interpolation_identities(Outcome& out) {
  testing::Rng rng(6);
  double worst = 0;
  int draws = 0;
  for (int round = 0; round < 1200; ++round) {
    int k = 2 + round % 3, n = 1 + (round / 3) % 3;
    KaryLattice kl(k, n);
    std::vector<Rational> levels = {0};
    for (int j = 1; j < k; ++j) levels.push_back(levels.back() + testing::random_rational(rng, 1, 3, 4));
    ReferenceScale scale = ReferenceScale::unipolar(levels);
    GeneralizedCapacity g = testing::random_capacity(rng, kl.lattice_ptr(), round % 2 == 0);
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) x.push_back(testing::random_rational(rng, 0, 1, 24) * levels.back());
    Rational e1 = e1_eval(kl, g, x, scale);
    auto [indexing, profile] = level_profile(kl, x, scale);
    Rational e2 = e2_eval(kl, g, profile);
    worst = std::max(worst, std::abs(to_double(e1) - to_double(e2)));
    out.require(e1 == e2, "mesh = staircase");
    out.require(e2 == kary_choquet(kl, g, profile).value, "staircase = integral");
    ++draws;
  }
  int bipolar_draws = 0;
  for (int round = 0; round < 1000; ++round) {
    int k = 2 + round % 3, n = 1 + (round / 3) % 3;
    KaryLattice kl(k, n);
    std::vector<Rational> positive = {0};
    for (int j = 1; j < k; ++j) positive.push_back(positive.back() + testing::random_rational(rng, 1, 2, 3));
    std::vector<Rational> levels;
    for (int j = k - 1; j > 0; --j) levels.push_back(-positive[j]);
    levels.insert(levels.end(), positive.begin(), positive.end());
    ReferenceScale scale = ReferenceScale::symmetric(levels);
    BipolarCapacity v = testing::random_bipolar_capacity(rng, kl.lattice_ptr(), round % 2 == 0);
    std::vector<Rational> x;
    for (int i = 0; i < n; ++i) {
      x.push_back(testing::random_rational(rng, -1, 1, 24) * positive.back());
    }
    Rational e3 = e3_eval(kl, v, x, scale);
    auto [indexing, profile] = bipolar_level_profile(kl, x, scale);
    Rational chi = bipolar_kary_choquet(kl, v, profile).value;
    worst = std::max(worst, std::abs(to_double(e3) - to_double(chi)));
    out.require(e3 == chi, "bipolar mesh = integral");
    ++bipolar_draws;
  }
  out.require(worst <= 1e-12, "tolerance");
  out.detail << draws << " unipolar mesh draws, " << bipolar_draws << " bipolar mesh draws, max |diff| " << worst;
}

// 7. Product formula against Rota's recursion on the explicit bipolar order.
void moebius_correctness(Outcome& out) {
  std::vector<std::pair<std::string, std::shared_ptr<const Poset>>> bases = {
      {"2^{1,2}", testing::antichain(2)},
      {"2^{1,2,3}", testing::antichain(3)},
      {"3^2", build_kary_base(3, 2)},
      {"two-bottom", testing::wedge_poset()}};
  testing::Rng rng(7);
  std::size_t pairs = 0;
  for (const auto& [name, base] : bases) {
    auto lattice = testing::lattice_of(base);
    auto ext = std::make_shared<const BipolarExtension>(lattice);
    testing::OracleMoebius oracle(ext->size(), [&](std::size_t a, std::size_t b) {
      return bipolar_leq(ext->element(a), ext->element(b));
    });
    for (std::size_t i = 0; i < ext->size(); ++i) {
      for (std::size_t j = 0; j < ext->size(); ++j) {
        if (!bipolar_leq(ext->element(i), ext->element(j))) continue;
        out.require(bipolar_moebius_function(*lattice, ext->element(i), ext->element(j)) ==
                        oracle(i, j),
                    "product formula on " + name);
        ++pairs;
      }
    }
    GeneralizedCapacity g = testing::random_capacity(rng, lattice, false);
    out.require(zeta_transform(moebius_transform(g)).values() == g.values(), "unipolar round trip");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < ext->size(); ++i) values.push_back(testing::random_rational(rng, -3, 3, 7));
    BipolarFunction v(ext, values);
    out.require(bipolar_zeta_transform(bipolar_moebius_transform(v)).values() == values,
                "bipolar round trip");
  }
  out.detail << pairs << " comparable pairs on 2^{1,2}, 2^{1,2,3}, 3^2 and the two-bottom lattice";
}

// 8. Interpolation, tie invariance and the two linearities.
void properties(Outcome& out) {
  testing::Rng rng(8);
  int vertices = 0;
  for (int round = 0; round < 20; ++round) {
    auto lattice = testing::lattice_of(small_base(rng, round, false));
    GeneralizedCapacity g = testing::random_capacity(rng, lattice, false);
    for (Downset x : lattice->elements()) {
      out.require(natural_extension(g, Profile::vertex(lattice->base_ptr(), x)) == g.value(x),
                  "vertex interpolation");
      ++vertices;
    }
  }

  int tie_cases = 0, reorderings = 0;
  while (tie_cases < 150) {
    auto lattice = testing::lattice_of(testing::random_poset(rng, 3 + tie_cases % 5, 0.25));
    Profile f = testing::random_profile(rng, lattice->base_ptr(), 8, true);
    std::set<Rational> distinct(f.values().begin(), f.values().end());
    if (distinct.size() == f.size()) continue;  // no tie to break
    GeneralizedCapacity g = testing::random_capacity(rng, lattice, tie_cases % 2 == 0);
    Rational reference = natural_extension(g, f);
    std::vector<Poset::Index> first = triangulate(f).permutation;
    for (int t = 0; t < 6; ++t) {
      auto order = random_linear_extension(rng, lattice->base());
      ChainDecomposition d = triangulate(f, order);
      reorderings += d.permutation != first ? 1 : 0;
      out.require(evaluate_on_chain(g, d) == reference, "tie invariance");
    }
    ++tie_cases;
  }
  out.require(reorderings > 0, "tie orders actually differ");

  int linear_cases = 0;
  for (int round = 0; round < 100; ++round) {
    auto lattice = testing::lattice_of(small_base(rng, round, false));
    GeneralizedCapacity g = testing::random_capacity(rng, lattice, true);
    GeneralizedCapacity h = testing::random_capacity(rng, lattice, false);
    Profile f = testing::random_profile(rng, lattice->base_ptr());
    ChainDecomposition d = triangulate(f);
    std::vector<Rational> a(f.size(), 0), b(f.size(), 0), sum(f.size(), 0);
    for (std::size_t i = 1; i < d.chain.size(); ++i) {
      Rational wa = testing::random_rational(rng, 0, 1, 10) / (2 * f.size());
      Rational wb = testing::random_rational(rng, 0, 1, 10) / (2 * f.size());
      for (std::size_t j : d.chain[i].members()) {
        a[j] += wa;
        b[j] += wb;
      }
    }
    for (std::size_t j = 0; j < f.size(); ++j) sum[j] = a[j] + b[j];
    const auto& base = lattice->base_ptr();
    out.require(natural_extension(g, Profile(base, sum)) ==
                    natural_extension(g, Profile(base, a)) + natural_extension(g, Profile(base, b)),
                "piecewise linearity");
    Rational alpha = testing::random_rational(rng, -2, 2, 5);
    Rational beta = testing::random_rational(rng, -2, 2, 5);
    out.require(natural_extension(GeneralizedCapacity::linear_combination(alpha, g, beta, h), f) ==
                    alpha * natural_extension(g, f) + beta * natural_extension(h, f),
                "linearity in F");
    ++linear_cases;
  }
  out.detail << vertices << " vertices, " << tie_cases << " tie cases (" << reorderings
             << " reordered chains), " << linear_cases << " linearity cases";
}

}  // namespace
}  // namespace natinterp

int main() {
  using natinterp::Outcome;
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"unipolar worked example", natinterp::unipolar_golden},
      {"bipolar worked example", natinterp::bipolar_golden},
      {"tile coverage", natinterp::structure},
      {"oracle equivalence", natinterp::oracle_equivalence},
      {"Boolean and k=2 reductions", natinterp::reductions},
      {"mesh interpolation identities", natinterp::interpolation_identities},
      {"Moebius product formula and round trips", natinterp::moebius_correctness},
      {"interpolation properties", natinterp::properties},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome out;
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail << "exception: " << e.what();
    }
    failures += out.passed ? 0 : 1;
    std::cout << (out.passed ? "PASS" : "FAIL") << "  [" << index << "] " << c.name << ": "
              << out.detail.str() << "\n";
  }
  return failures == 0 ? 0 : 1;
}
