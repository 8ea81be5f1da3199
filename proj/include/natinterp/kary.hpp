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

// The lattice k^n of n criteria with k ordered reference levels each: k-ary
// capacities and bicapacities, reference scales, and the mesh interpolation
// formulas that evaluate a score vector directly from the surrounding nodes.

#ifndef NATINTERP_KARY_HPP_
#define NATINTERP_KARY_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "natinterp/bipolar.hpp"
#include "natinterp/interpolation.hpp"
#include "natinterp/moebius.hpp"
#include "natinterp/rational.hpp"

namespace natinterp {

// A lattice point of k^n: one level in {0, …, k−1} per criterion.
using KaryNode = std::vector<int>;

// n disjoint chains of k−1 elements. The element for (criterion i, level l)
// has index i·(k−1) + (l−1) and is labelled with the node that is l at
// position i and 0 elsewhere, e.g. "(0,2)". Throws InvalidDimensions unless
// k ≥ 2, n ≥ 1 and n(k−1) ≤ 64.
std::shared_ptr<const Poset> build_kary_base(int k, int n);

std::string node_label(const KaryNode& node);

class KaryLattice {
 public:
  KaryLattice(int k, int n, std::size_t cap = kDefaultDownsetCap);

  int k() const { return k_; }
  int n() const { return n_; }
  const Poset& base() const { return *base_; }
  const std::shared_ptr<const Poset>& base_ptr() const { return base_; }
  const DownsetLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const DownsetLattice>& lattice_ptr() const { return lattice_; }

  Poset::Index element(int criterion, int level) const {
    return static_cast<Poset::Index>(criterion * (k_ - 1) + (level - 1));
  }
  int criterion_of(Poset::Index j) const { return static_cast<int>(j) / (k_ - 1); }
  int level_of(Poset::Index j) const { return static_cast<int>(j) % (k_ - 1) + 1; }

  // Throws InvalidInput for wrong arity or levels outside {0, …, k−1}.
  Downset downset_of(const KaryNode& node) const;
  // Throws NotAnElement.
  KaryNode node_of(Downset x) const;
  // (pos, neg) nodes as an element of L̃. Throws NotInBipolarExtension when
  // both are nonzero on a criterion.
  BipolarElement bipolar_of(const KaryNode& pos, const KaryNode& neg) const;

  // ((k−1)_A, 0_{−A}).
  Downset complemented(const std::vector<int>& criteria) const;

 private:
  int k_;
  int n_;
  std::shared_ptr<const Poset> base_;
  std::shared_ptr<const DownsetLattice> lattice_;
};

// Reference levels ρ. A unipolar scale is ρ_0 < … < ρ_{k−1}; a symmetric one
// is ρ_{−k+1} < … < ρ_0 = 0 < … < ρ_{k−1}, stored as one increasing list.
class ReferenceScale {
 public:
  // Throws InvalidInput unless strictly increasing with at least two levels.
  static ReferenceScale unipolar(std::vector<Rational> levels);
  // Additionally needs odd length with 0 in the middle.
  static ReferenceScale symmetric(std::vector<Rational> levels);

  bool is_symmetric() const { return symmetric_; }
  int k() const { return k_; }
  // ρ_j for j in [0, k−1], or [−(k−1), k−1] on a symmetric scale.
  const Rational& level(int j) const;
  const std::vector<Rational>& levels() const { return levels_; }

 private:
  ReferenceScale(std::vector<Rational> levels, bool symmetric);

  std::vector<Rational> levels_;
  bool symmetric_;
  int k_;
  int zero_;  // position of ρ_0 in levels_
};

// Where a score vector sits in the mesh.
struct LevelIndexing {
  std::vector<int> level;        // I_i (or J_i), in {1, …, k−1}
  std::vector<Rational> z;       // residues in [0,1]
  std::vector<bool> positive;    // i ∈ A; all true for unipolar input
  std::vector<std::size_t> sigma;  // criteria sorted by z descending, ties by index
  int q = 0;                     // Σ (level_i − 1)
};

// I_i = min{j ≥ 1 | x_i ≤ ρ_j} and z_i = (x_i − ρ_{I−1}) / (ρ_I − ρ_{I−1});
// negative coordinates of a symmetric scale are mirrored. Throws OutOfScale.
LevelIndexing locate(const ReferenceScale& scale, std::span<const Rational> x);

// The staircase profile 1, …, 1, z_i, 0, …, 0 on every chain. Throws
// OutOfScale, InvalidInput (scale k or arity mismatch).
std::pair<LevelIndexing, Profile> level_profile(const KaryLattice& lattice,
                                                std::span<const Rational> x,
                                                const ReferenceScale& scale);
// Signed staircase on a symmetric scale (negative on criteria outside A).
std::pair<LevelIndexing, BipolarProfile> bipolar_level_profile(const KaryLattice& lattice,
                                                               std::span<const Rational> x,
                                                               const ReferenceScale& scale);

// Reads (J_i, z_i) back from a staircase profile. At a level boundary the
// lower interval is chosen, matching locate(). Throws NotStaircase.
LevelIndexing staircase_of(const KaryLattice& lattice, const Profile& f);

struct KaryEvaluation {
  Rational value;
  ChainDecomposition decomposition;
  std::vector<int> lambda;  // level of π(i)
  std::vector<int> theta;   // criterion of π(i), 0-based
  std::vector<int> tile;    // criteria in A (bipolar only), 0-based
};

KaryEvaluation kary_choquet(const KaryLattice& lattice, const GeneralizedCapacity& capacity,
                            const Profile& f);
KaryEvaluation bipolar_kary_choquet(const KaryLattice& lattice,
                                    const BipolarCapacity& capacity,
                                    const BipolarProfile& f);

// Mesh interpolation from the 2^n corners around x, reading F lazily.
Rational e1_eval(const KaryLattice& lattice, const GeneralizedCapacity& capacity,
                 std::span<const Rational> x, const ReferenceScale& scale);
// The same value from the (J, z) description of a staircase profile.
Rational e2_eval(const KaryLattice& lattice, const GeneralizedCapacity& capacity,
                 const Profile& f);
Rational e2_eval(const KaryLattice& lattice, const GeneralizedCapacity& capacity,
                 const LevelIndexing& indexing);
// Bipolar mesh interpolation on a symmetric scale.
Rational e3_eval(const KaryLattice& lattice, const BipolarCapacity& capacity,
                 std::span<const Rational> x, const ReferenceScale& scale);

}  // namespace natinterp

#endif  // NATINTERP_KARY_HPP_
