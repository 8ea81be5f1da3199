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

#include "natinterp/interpolation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "natinterp/error.hpp"
#include "natinterp/kernels.hpp"

namespace natinterp {
namespace {

ChainDecomposition triangulate_by_rank(const Profile& f, std::span<const std::size_t> rank) {
  const std::size_t m = f.size();
  ChainDecomposition out;
  out.permutation.resize(m);
  std::iota(out.permutation.begin(), out.permutation.end(), Poset::Index{0});
  std::sort(out.permutation.begin(), out.permutation.end(), [&](Poset::Index a, Poset::Index b) {
    if (f[a] != f[b]) return f[a] > f[b];
    return rank[a] < rank[b];
  });

  out.inverse.resize(m);
  out.chain.reserve(m + 1);
  out.chain.emplace_back();
  for (std::size_t i = 0; i < m; ++i) {
    out.inverse[out.permutation[i]] = i;
    out.chain.push_back(out.chain.back() | Downset::singleton(out.permutation[i]));
  }

  out.weights.resize(m + 1);
  if (m == 0) {
    out.weights[0] = 1;
    return out;
  }
  out.weights[0] = 1 - f[out.permutation[0]];
  for (std::size_t i = 1; i < m; ++i) {
    out.weights[i] = f[out.permutation[i - 1]] - f[out.permutation[i]];
  }
  out.weights[m] = f[out.permutation[m - 1]];
  return out;
}

}  // namespace

Profile::Profile(std::shared_ptr<const Poset> base, std::vector<Rational> values)
    : base_(std::move(base)), values_(std::move(values)) {
  if (!base_ || values_.size() != base_->size()) {
    throw Error(ErrorCode::kInvalidInput, "profile needs one value per base element");
  }
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] < 0 || values_[j] > 1) {
      throw Error(ErrorCode::kValueOutOfRange,
                  "f(" + base_->label(j) + ") = " + to_string(values_[j]) + " is outside [0,1]");
    }
  }
  for (auto [lower, upper] : base_->covers()) {
    if (values_[lower] < values_[upper]) {
      throw Error(ErrorCode::kNotNonincreasing, "f(" + base_->label(lower) + ") < f(" +
                                                    base_->label(upper) + ")");
    }
  }
}

Profile Profile::vertex(std::shared_ptr<const Poset> base, Downset x) {
  if (!base->is_downset(x)) throw Error(ErrorCode::kNotAnElement, "vertex set is not a downset");
  std::vector<Rational> values(base->size());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = x.contains(j) ? 1 : 0;
  return Profile(std::move(base), std::move(values));
}

std::vector<Rational> ChainDecomposition::reconstruct(std::size_t base_size) const {
  std::vector<Rational> out(base_size);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    for (std::size_t j : chain[i].members()) out[j] += weights[i];
  }
  return out;
}

ChainDecomposition triangulate(const Profile& f) {
  return triangulate_by_rank(f, f.base().linear_position());
}

ChainDecomposition triangulate(const Profile& f, std::span<const Poset::Index> tie_order) {
  const Poset& base = f.base();
  if (tie_order.size() != base.size()) {
    throw Error(ErrorCode::kInvalidInput, "tie order must list every base element once");
  }
  std::vector<std::size_t> rank(base.size(), base.size());
  for (std::size_t i = 0; i < tie_order.size(); ++i) {
    if (tie_order[i] >= base.size() || rank[tie_order[i]] != base.size()) {
      throw Error(ErrorCode::kInvalidInput, "tie order must list every base element once");
    }
    rank[tie_order[i]] = i;
  }
  for (auto [lower, upper] : base.covers()) {
    if (rank[lower] > rank[upper]) {
      throw Error(ErrorCode::kInvalidInput, "tie order is not a linear extension: " +
                                                base.label(upper) + " before " +
                                                base.label(lower));
    }
  }
  return triangulate_by_rank(f, rank);
}

Rational evaluate_on_chain(const GeneralizedCapacity& capacity,
                           const ChainDecomposition& decomposition) {
  Rational sum = 0;
  for (std::size_t i = 0; i < decomposition.chain.size(); ++i) {
    if (decomposition.weights[i] == 0) continue;
    sum += decomposition.weights[i] * capacity.value(decomposition.chain[i]);
  }
  return sum;
}

void require_same_base(const Poset& expected, const Poset& actual) {
  if (&expected == &actual || expected == actual) return;
  throw Error(ErrorCode::kBaseMismatch, "capacity and profile are defined on different posets");
}

Rational natural_extension(const GeneralizedCapacity& capacity, const Profile& f) {
  require_same_base(capacity.lattice().base(), f.base());
  return evaluate_on_chain(capacity, triangulate(f));
}

Rational choquet_classical(const GeneralizedCapacity& capacity,
                           std::span<const Rational> scores) {
  const Poset& base = capacity.lattice().base();
  if (!base.covers().empty()) {
    throw Error(ErrorCode::kInvalidInput, "classical Choquet integral needs an antichain base");
  }
  if (scores.size() != base.size()) {
    throw Error(ErrorCode::kInvalidInput, "one score per criterion is required");
  }
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] < 0) {
      throw Error(ErrorCode::kNegativeScore,
                  "score of " + base.label(i) + " is " + to_string(scores[i]));
    }
  }
  std::vector<Poset::Index> order(base.size());
  std::iota(order.begin(), order.end(), Poset::Index{0});
  const auto& position = base.linear_position();
  std::sort(order.begin(), order.end(), [&](Poset::Index a, Poset::Index b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return position[a] < position[b];
  });

  Rational sum = 0;
  Downset prefix;
  for (std::size_t i = 0; i < order.size(); ++i) {
    prefix |= Downset::singleton(order[i]);
    Rational next = i + 1 < order.size() ? scores[order[i + 1]] : Rational(0);
    Rational step = scores[order[i]] - next;
    if (step != 0) sum += step * capacity.value(prefix);
  }
  return sum;
}

Rational meet_over(const Profile& f, Downset x) {
  Rational low = 1;
  for (std::size_t j : x.members()) {
    if (f[j] < low) low = f[j];
  }
  return low;
}

Rational zero_one_maxmin(const GeneralizedCapacity& capacity, const Profile& f) {
  require_same_base(capacity.lattice().base(), f.base());
  const DownsetLattice& lattice = capacity.lattice();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (capacity[i] != 0 && capacity[i] != 1) {
      throw Error(ErrorCode::kNotZeroOne, "F(" + lattice.element_label(lattice.element(i)) +
                                              ") = " + to_string(capacity[i]));
    }
  }
  if (!capacity.is_monotone()) throw Error(ErrorCode::kNotMonotone, "F is not nondecreasing");

  Rational best = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (capacity[i] != 1) continue;
    Rational m = meet_over(f, lattice.element(i));
    if (m > best) best = m;
  }
  return best;
}

Rational moebius_form_eval(const MoebiusVector& coefficients, const Profile& f) {
  require_same_base(coefficients.lattice().base(), f.base());
  const DownsetLattice& lattice = coefficients.lattice();
  Rational sum = 0;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (coefficients[i] == 0) continue;
    sum += coefficients[i] * meet_over(f, lattice.element(i));
  }
  return sum;
}

std::vector<Rational> natural_extension_batch(const GeneralizedCapacity& capacity,
                                              std::span<const Profile> profiles) {
  return kernels::natural_extension_batch(capacity, profiles);
}

}  // namespace natinterp
