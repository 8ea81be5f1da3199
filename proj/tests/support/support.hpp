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

// Shared fixtures, random instance generators and brute-force oracles for the
// unit tests and the acceptance runner. Oracles here deliberately avoid the
// library's evaluation code paths.

#ifndef NATINTERP_TESTS_SUPPORT_HPP_
#define NATINTERP_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "natinterp/bipolar.hpp"
#include "natinterp/bipolar_extension.hpp"
#include "natinterp/birkhoff.hpp"
#include "natinterp/interpolation.hpp"
#include "natinterp/kary.hpp"
#include "natinterp/moebius.hpp"
#include "natinterp/poset.hpp"
#include "natinterp/rational.hpp"

namespace natinterp::testing {

using Rng = std::mt19937_64;

inline Rational q(const char* text) { return parse_rational(text); }

inline Rational frac(long num, long den) { return Rational(num) / Rational(den); }

inline std::string letter(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

// {a < b, c < b}: two minimal elements in one component.
inline std::shared_ptr<const Poset> wedge_poset() {
  return std::make_shared<const Poset>(validate_poset({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}}));
}

inline std::shared_ptr<const Poset> antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  return std::make_shared<const Poset>(validate_poset(labels, {}));
}

inline std::shared_ptr<const Poset> chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(labels[i - 1], labels[i]);
  }
  return std::make_shared<const Poset>(validate_poset(labels, covers));
}

inline std::shared_ptr<const DownsetLattice> lattice_of(std::shared_ptr<const Poset> p) {
  return std::make_shared<const DownsetLattice>(std::move(p));
}

// Random order on n labelled elements: i < j is drawn for i < j in a random
// relabelling, then closed transitively.
inline std::shared_ptr<const Poset> random_poset(Rng& rng, std::size_t n, double density = 0.35) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    rel[i][i] = true;
    for (std::size_t j = i + 1; j < n; ++j) rel[i][j] = edge(rng);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
      }
    }
  }
  std::vector<std::string> labels(n);
  std::vector<std::size_t> slot(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[perm[i]] = letter(i);
    slot[perm[i]] = i;
  }
  return std::make_shared<const Poset>(Poset::from_order(
      labels, [&](Poset::Index a, Poset::Index b) { return rel[slot[a]][slot[b]]; }));
}

// A forest of upward trees: every component has a single minimal element.
inline std::shared_ptr<const Poset> random_mosaic_forest(Rng& rng, std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  std::bernoulli_distribution new_root(0.35);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(letter(i));
    if (i > 0 && !new_root(rng)) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      covers.emplace_back(labels[parent(rng)], labels[i]);
    }
  }
  return std::make_shared<const Poset>(validate_poset(labels, covers));
}

inline Rational random_rational(Rng& rng, long low, long high, long den) {
  std::uniform_int_distribution<long> num(low * den, high * den);
  return frac(num(rng), den);
}

inline GeneralizedCapacity random_capacity(Rng& rng, std::shared_ptr<const DownsetLattice> lattice,
                                           bool game = true) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < lattice->size(); ++i) values.push_back(random_rational(rng, -2, 2, 12));
  if (game) values[0] = 0;
  return GeneralizedCapacity(std::move(lattice), std::move(values));
}

// Monotone 0-1 functional: the up-closure of a few random generators.
inline GeneralizedCapacity random_zero_one(Rng& rng, std::shared_ptr<const DownsetLattice> lattice) {
  std::uniform_int_distribution<std::size_t> pick(0, lattice->size() - 1);
  std::uniform_int_distribution<int> how_many(0, 3);
  std::vector<Downset> generators;
  for (int g = how_many(rng); g > 0; --g) generators.push_back(lattice->element(pick(rng)));
  std::vector<Rational> values;
  for (Downset x : lattice->elements()) {
    bool up = std::any_of(generators.begin(), generators.end(),
                          [&](Downset g) { return g.is_subset_of(x); });
    values.push_back(up ? 1 : 0);
  }
  return GeneralizedCapacity(std::move(lattice), std::move(values));
}

// Nonincreasing values in [0,1] with denominators `den`. With `ties`, values
// repeat often (a small pool and frequent copies of the upper bound).
inline std::vector<Rational> random_magnitudes(Rng& rng, const Poset& base, long den, bool ties) {
  std::vector<Rational> f(base.size());
  std::bernoulli_distribution copy(ties ? 0.4 : 0.05);
  for (Poset::Index j : base.linear_extension()) {
    Rational bound = 1;
    for (Poset::Index lower : base.lower_covers(j)) bound = std::min(bound, f[lower]);
    if (copy(rng)) {
      f[j] = bound;
      continue;
    }
    Rational scaled = bound * den;
    long top = mpz_class(scaled.get_num() / scaled.get_den()).get_si();
    long step = ties ? 4 : 1;
    std::uniform_int_distribution<long> pick(0, top / step);
    f[j] = frac(pick(rng) * step, den);
  }
  return f;
}

inline Profile random_profile(Rng& rng, std::shared_ptr<const Poset> base, long den = 20,
                              bool ties = false) {
  auto values = random_magnitudes(rng, *base, den, ties);
  return Profile(std::move(base), std::move(values));
}

// Bipolar profile with one sign per connected component, so it lies in C_x
// for the tile made of the positive components.
inline BipolarProfile random_bipolar_profile(Rng& rng, std::shared_ptr<const Poset> base,
                                             long den = 20, bool ties = false) {
  auto values = random_magnitudes(rng, *base, den, ties);
  std::bernoulli_distribution negative(0.5);
  for (const Component& c : connected_components(*base)) {
    if (!negative(rng)) continue;
    for (auto j : c.members) values[j] = -values[j];
  }
  return BipolarProfile(std::move(base), std::move(values));
}

inline BipolarCapacity random_bipolar_capacity(Rng& rng,
                                               std::shared_ptr<const DownsetLattice> lattice,
                                               bool game = true) {
  std::vector<std::pair<BipolarElement, Rational>> entries;
  for (const BipolarElement& e : tile_union(*lattice)) {
    Rational v = game && e.pos.empty() && e.neg.empty() ? Rational(0)
                                                        : random_rational(rng, -2, 2, 12);
    entries.emplace_back(e, std::move(v));
  }
  return BipolarCapacity(std::move(lattice), std::move(entries));
}

// ---- Oracles ---------------------------------------------------------------

// Level-set form of the natural extension: with distinct values
// t_1 > … > t_r > 0 of f, F̄(f) = (1 − t_1) F(∅) + Σ_k (t_k − t_{k+1}) F({f ≥ t_k}).
// No permutation and no tie-breaking involved.
inline Rational oracle_natural_extension(const std::function<Rational(Downset)>& value,
                                         const std::vector<Rational>& f) {
  std::set<Rational, std::greater<>> levels(f.begin(), f.end());
  levels.erase(Rational(0));
  Rational sum = 0;
  Rational previous = 1;
  for (const Rational& t : levels) {
    sum += (previous - t) * value([&] {
      Downset s;
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j] >= previous) s |= Downset::singleton(j);
      }
      return s;
    }());
    previous = t;
  }
  Downset last;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j] >= previous) last |= Downset::singleton(j);
  }
  sum += previous * value(last);
  return sum;
}

// Same for bipolar profiles: level sets of |f| split by sign.
inline Rational oracle_bipolar_extension(const std::function<Rational(BipolarElement)>& value,
                                         const std::vector<Rational>& f) {
  std::vector<Rational> mag(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) mag[j] = abs_value(f[j]);
  std::set<Rational, std::greater<>> levels(mag.begin(), mag.end());
  levels.erase(Rational(0));
  auto cut = [&](const Rational& t) {
    BipolarElement e;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (mag[j] >= t && f[j] > 0) e.pos |= Downset::singleton(j);
      if (mag[j] >= t && f[j] < 0) e.neg |= Downset::singleton(j);
    }
    return e;
  };
  Rational sum = 0;
  Rational previous = 1;
  for (const Rational& t : levels) {
    sum += (previous - t) * value(cut(previous));
    previous = t;
  }
  sum += previous * value(cut(previous));
  return sum;
}

// Rota's recursion on an explicit finite order given by a predicate.
class OracleMoebius {
 public:
  OracleMoebius(std::size_t size, std::function<bool(std::size_t, std::size_t)> leq)
      : size_(size), leq_(std::move(leq)) {}

  long operator()(std::size_t lower, std::size_t upper) {
    if (lower == upper) return 1;
    auto key = std::make_pair(lower, upper);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long sum = 0;
    for (std::size_t z = 0; z < size_; ++z) {
      if (z != upper && leq_(lower, z) && leq_(z, upper)) sum += (*this)(lower, z);
    }
    return memo_[key] = -sum;
  }

 private:
  std::size_t size_;
  std::function<bool(std::size_t, std::size_t)> leq_;
  std::map<std::pair<std::size_t, std::size_t>, long> memo_;
};

// Classical Choquet integral with scores sorted ascending:
// Σ_i (f_(i) − f_(i−1)) ν({j : f_j ≥ f_(i)}).
inline Rational oracle_choquet(const std::function<Rational(Downset)>& nu,
                               const std::vector<Rational>& scores) {
  std::vector<Rational> sorted(scores);
  std::sort(sorted.begin(), sorted.end());
  Rational sum = 0;
  Rational previous = 0;
  for (const Rational& s : sorted) {
    if (s == previous) continue;
    Downset upper;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (scores[j] >= s) upper |= Downset::singleton(j);
    }
    sum += (s - previous) * nu(upper);
    previous = s;
  }
  return sum;
}

}  // namespace natinterp::testing

#endif  // NATINTERP_TESTS_SUPPORT_HPP_
