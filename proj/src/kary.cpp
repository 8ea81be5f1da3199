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

#include "natinterp/kary.hpp"

#include <algorithm>
#include <numeric>

#include "natinterp/error.hpp"

namespace natinterp {
namespace {

std::vector<std::size_t> sort_by_residue(const std::vector<Rational>& z) {
  std::vector<std::size_t> sigma(z.size());
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::stable_sort(sigma.begin(), sigma.end(),
                   [&](std::size_t a, std::size_t b) { return z[a] > z[b]; });
  return sigma;
}

void require_arity(const KaryLattice& lattice, std::size_t size) {
  if (size != static_cast<std::size_t>(lattice.n())) {
    throw Error(ErrorCode::kInvalidInput, "expected " + std::to_string(lattice.n()) +
                                              " coordinates, got " + std::to_string(size));
  }
}

void require_scale(const KaryLattice& lattice, const ReferenceScale& scale, bool symmetric) {
  if (scale.k() != lattice.k()) {
    throw Error(ErrorCode::kInvalidInput, "scale has " + std::to_string(scale.k()) +
                                              " levels per side, lattice has k = " +
                                              std::to_string(lattice.k()));
  }
  if (scale.is_symmetric() != symmetric) {
    throw Error(ErrorCode::kInvalidInput,
                symmetric ? "a symmetric scale is required" : "a unipolar scale is required");
  }
}

KaryEvaluation with_levels(const KaryLattice& lattice, Rational value,
                           ChainDecomposition decomposition) {
  KaryEvaluation out{std::move(value), std::move(decomposition), {}, {}, {}};
  for (Poset::Index j : out.decomposition.permutation) {
    out.lambda.push_back(lattice.level_of(j));
    out.theta.push_back(lattice.criterion_of(j));
  }
  return out;
}

}  // namespace

std::string node_label(const KaryNode& node) {
  std::string out = "(";
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(node[i]);
  }
  return out + ")";
}

std::shared_ptr<const Poset> build_kary_base(int k, int n) {
  if (k < 2 || n < 1 || static_cast<std::size_t>(n) * static_cast<std::size_t>(k - 1) > kMaxBaseSize) {
    throw Error(ErrorCode::kInvalidDimensions,
                "k = " + std::to_string(k) + ", n = " + std::to_string(n) +
                    " (need k >= 2, n >= 1 and n(k-1) <= " + std::to_string(kMaxBaseSize) + ")");
  }
  std::vector<std::string> labels;
  std::vector<std::pair<Poset::Index, Poset::Index>> covers;
  for (int i = 0; i < n; ++i) {
    for (int l = 1; l < k; ++l) {
      KaryNode node(n, 0);
      node[i] = l;
      if (l > 1) covers.emplace_back(labels.size() - 1, labels.size());
      labels.push_back(node_label(node));
    }
  }
  return std::make_shared<const Poset>(Poset::from_covers(std::move(labels), std::move(covers)));
}

KaryLattice::KaryLattice(int k, int n, std::size_t cap)
    : k_(k),
      n_(n),
      base_(build_kary_base(k, n)),
      lattice_(std::make_shared<const DownsetLattice>(base_, cap)) {}

Downset KaryLattice::downset_of(const KaryNode& node) const {
  require_arity(*this, node.size());
  Downset out;
  for (int i = 0; i < n_; ++i) {
    if (node[i] < 0 || node[i] >= k_) {
      throw Error(ErrorCode::kInvalidInput,
                  "level " + std::to_string(node[i]) + " outside 0.." + std::to_string(k_ - 1));
    }
    for (int l = 1; l <= node[i]; ++l) out |= Downset::singleton(element(i, l));
  }
  return out;
}

KaryNode KaryLattice::node_of(Downset x) const {
  lattice_->eta(x);
  KaryNode node(n_, 0);
  for (std::size_t j : x.members()) {
    node[criterion_of(j)] = std::max(node[criterion_of(j)], level_of(j));
  }
  return node;
}

BipolarElement KaryLattice::bipolar_of(const KaryNode& pos, const KaryNode& neg) const {
  BipolarElement e{downset_of(pos), downset_of(neg)};
  for (int i = 0; i < n_; ++i) {
    if (pos[i] != 0 && neg[i] != 0) {
      throw Error(ErrorCode::kNotInBipolarExtension,
                  "(" + node_label(pos) + "," + node_label(neg) + ") uses criterion " +
                      std::to_string(i + 1) + " on both sides");
    }
  }
  return e;
}

Downset KaryLattice::complemented(const std::vector<int>& criteria) const {
  KaryNode node(n_, 0);
  for (int i : criteria) {
    if (i < 0 || i >= n_) throw Error(ErrorCode::kInvalidInput, "criterion out of range");
    node[i] = k_ - 1;
  }
  return downset_of(node);
}

ReferenceScale::ReferenceScale(std::vector<Rational> levels, bool symmetric)
    : levels_(std::move(levels)), symmetric_(symmetric) {
  if (levels_.size() < 2) throw Error(ErrorCode::kInvalidInput, "a scale needs two levels");
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (!(levels_[i - 1] < levels_[i])) {
      throw Error(ErrorCode::kInvalidInput, "scale levels must be strictly increasing");
    }
  }
  if (symmetric_) {
    if (levels_.size() % 2 == 0) {
      throw Error(ErrorCode::kInvalidInput, "a symmetric scale needs an odd number of levels");
    }
    zero_ = static_cast<int>(levels_.size() / 2);
    if (levels_[zero_] != 0) {
      throw Error(ErrorCode::kInvalidInput, "the middle level of a symmetric scale must be 0");
    }
    k_ = zero_ + 1;
  } else {
    zero_ = 0;
    k_ = static_cast<int>(levels_.size());
  }
}

ReferenceScale ReferenceScale::unipolar(std::vector<Rational> levels) {
  return ReferenceScale(std::move(levels), false);
}

ReferenceScale ReferenceScale::symmetric(std::vector<Rational> levels) {
  return ReferenceScale(std::move(levels), true);
}

const Rational& ReferenceScale::level(int j) const {
  int low = symmetric_ ? -(k_ - 1) : 0;
  if (j < low || j > k_ - 1) throw Error(ErrorCode::kInvalidInput, "no such level");
  return levels_[zero_ + j];
}

LevelIndexing locate(const ReferenceScale& scale, std::span<const Rational> x) {
  const int k = scale.k();
  const Rational& low = scale.levels().front();
  const Rational& high = scale.levels().back();
  LevelIndexing out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < low || x[i] > high) {
      throw Error(ErrorCode::kOutOfScale, "x_" + std::to_string(i + 1) + " = " +
                                              to_string(x[i]) + " outside [" + to_string(low) +
                                              ", " + to_string(high) + "]");
    }
    bool positive = !scale.is_symmetric() || x[i] >= 0;
    int j = 1;
    Rational z;
    if (positive) {
      while (j < k - 1 && x[i] > scale.level(j)) ++j;
      z = (x[i] - scale.level(j - 1)) / (scale.level(j) - scale.level(j - 1));
    } else {
      while (j < k - 1 && x[i] < scale.level(-j)) ++j;
      z = (x[i] - scale.level(-j + 1)) / (scale.level(-j) - scale.level(-j + 1));
    }
    out.level.push_back(j);
    out.z.push_back(std::move(z));
    out.positive.push_back(positive);
    out.q += j - 1;
  }
  out.sigma = sort_by_residue(out.z);
  return out;
}

namespace {

std::vector<Rational> staircase_values(const KaryLattice& lattice, const LevelIndexing& idx) {
  std::vector<Rational> values(lattice.base().size());
  for (int i = 0; i < lattice.n(); ++i) {
    for (int l = 1; l < lattice.k(); ++l) {
      Rational v = l < idx.level[i] ? Rational(1) : l == idx.level[i] ? idx.z[i] : Rational(0);
      values[lattice.element(i, l)] = idx.positive[i] ? v : Rational(-v);
    }
  }
  return values;
}

}  // namespace

std::pair<LevelIndexing, Profile> level_profile(const KaryLattice& lattice,
                                                std::span<const Rational> x,
                                                const ReferenceScale& scale) {
  require_arity(lattice, x.size());
  require_scale(lattice, scale, false);
  LevelIndexing idx = locate(scale, x);
  Profile f(lattice.base_ptr(), staircase_values(lattice, idx));
  return {std::move(idx), std::move(f)};
}

std::pair<LevelIndexing, BipolarProfile> bipolar_level_profile(const KaryLattice& lattice,
                                                               std::span<const Rational> x,
                                                               const ReferenceScale& scale) {
  require_arity(lattice, x.size());
  require_scale(lattice, scale, true);
  LevelIndexing idx = locate(scale, x);
  BipolarProfile f(lattice.base_ptr(), staircase_values(lattice, idx));
  return {std::move(idx), std::move(f)};
}

LevelIndexing staircase_of(const KaryLattice& lattice, const Profile& f) {
  require_same_base(lattice.base(), f.base());
  LevelIndexing out;
  const int top = lattice.k() - 1;
  for (int i = 0; i < lattice.n(); ++i) {
    auto at = [&](int l) -> const Rational& { return f[lattice.element(i, l)]; };
    int j = 1;
    while (j < top && at(j) == 1) ++j;
    Rational z = at(j);
    if (z == 0 && j > 1) {
      --j;
      z = 1;
    }
    for (int l = 1; l <= top; ++l) {
      bool ok = l < j ? at(l) == 1 : l == j ? true : at(l) == 0;
      if (!ok) {
        throw Error(ErrorCode::kNotStaircase, "criterion " + std::to_string(i + 1) +
                                                  " is not of the form 1,…,1,z,0,…,0");
      }
    }
    out.level.push_back(j);
    out.z.push_back(std::move(z));
    out.positive.push_back(true);
    out.q += j - 1;
  }
  out.sigma = sort_by_residue(out.z);
  return out;
}

KaryEvaluation kary_choquet(const KaryLattice& lattice, const GeneralizedCapacity& capacity,
                            const Profile& f) {
  require_same_base(lattice.base(), capacity.lattice().base());
  require_same_base(lattice.base(), f.base());
  ChainDecomposition d = triangulate(f);
  Rational value = evaluate_on_chain(capacity, d);
  return with_levels(lattice, std::move(value), std::move(d));
}

KaryEvaluation bipolar_kary_choquet(const KaryLattice& lattice,
                                    const BipolarCapacity& capacity,
                                    const BipolarProfile& f) {
  require_same_base(lattice.base(), capacity.base());
  BipolarEvaluation e = bipolar_natural_extension_detailed(capacity, f);
  KaryEvaluation out = with_levels(lattice, std::move(e.value), std::move(e.decomposition));
  for (int i = 0; i < lattice.n(); ++i) {
    if (e.tile.contains(lattice.element(i, 1))) out.tile.push_back(i);
  }
  return out;
}

Rational e1_eval(const KaryLattice& lattice, const GeneralizedCapacity& capacity,
                 std::span<const Rational> x, const ReferenceScale& scale) {
  require_arity(lattice, x.size());
  require_scale(lattice, scale, false);
  require_same_base(lattice.base(), capacity.lattice().base());
  LevelIndexing idx = locate(scale, x);
  const int n = lattice.n();

  // v_x(S) = F at the corner with level I_i on S and I_i − 1 elsewhere.
  auto v = [&](const std::vector<bool>& in_s) {
    KaryNode node(n);
    for (int i = 0; i < n; ++i) node[i] = idx.level[i] - (in_s[i] ? 0 : 1);
    return capacity.value(lattice.downset_of(node));
  };

  std::vector<bool> s(n, false);
  const std::vector<std::size_t>& order = idx.sigma;
  Rational sum = (1 - idx.z[order[0]]) * v(s);
  for (int i = 0; i < n; ++i) {
    s[order[i]] = true;
    Rational next = i + 1 < n ? idx.z[order[i + 1]] : Rational(0);
    Rational weight = idx.z[order[i]] - next;
    if (weight != 0) sum += weight * v(s);
  }
  return sum;
}

Rational e2_eval(const KaryLattice& lattice, const GeneralizedCapacity& capacity,
                 const LevelIndexing& indexing) {
  require_same_base(lattice.base(), capacity.lattice().base());
  require_arity(lattice, indexing.level.size());
  // X_{q^f} = all levels strictly below J_i on each chain.
  Downset x;
  for (int i = 0; i < lattice.n(); ++i) {
    for (int l = 1; l < indexing.level[i]; ++l) x |= Downset::singleton(lattice.element(i, l));
  }
  const auto& sigma = indexing.sigma;
  const auto& z = indexing.z;
  Rational sum = (1 - z[sigma[0]]) * capacity.value(x);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    x |= Downset::singleton(lattice.element(static_cast<int>(sigma[i]), indexing.level[sigma[i]]));
    Rational next = i + 1 < sigma.size() ? z[sigma[i + 1]] : Rational(0);
    Rational weight = z[sigma[i]] - next;
    if (weight != 0) sum += weight * capacity.value(x);
  }
  return sum;
}

Rational e2_eval(const KaryLattice& lattice, const GeneralizedCapacity& capacity,
                 const Profile& f) {
  return e2_eval(lattice, capacity, staircase_of(lattice, f));
}

Rational e3_eval(const KaryLattice& lattice, const BipolarCapacity& capacity,
                 std::span<const Rational> x, const ReferenceScale& scale) {
  require_arity(lattice, x.size());
  require_scale(lattice, scale, true);
  require_same_base(lattice.base(), capacity.base());
  LevelIndexing idx = locate(scale, x);
  const int n = lattice.n();

  // V(S): levels J_i − 1 (+1 on S), placed on the positive side for i ∈ A.
  auto big_v = [&](const std::vector<bool>& in_s) {
    KaryNode pos(n, 0);
    KaryNode neg(n, 0);
    for (int i = 0; i < n; ++i) {
      int level = idx.level[i] - (in_s[i] ? 0 : 1);
      (idx.positive[i] ? pos : neg)[i] = level;
    }
    return capacity.value(lattice.bipolar_of(pos, neg));
  };

  std::vector<bool> s(n, false);
  const std::vector<std::size_t>& order = idx.sigma;
  Rational sum = (1 - idx.z[order[0]]) * big_v(s);
  for (int i = 0; i < n; ++i) {
    s[order[i]] = true;
    Rational next = i + 1 < n ? idx.z[order[i + 1]] : Rational(0);
    Rational weight = idx.z[order[i]] - next;
    if (weight != 0) sum += weight * big_v(s);
  }
  return sum;
}

}  // namespace natinterp
