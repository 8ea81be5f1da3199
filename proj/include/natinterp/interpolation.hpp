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

// The natural extension of a vertex functional over the order polytope of
// J(L): triangulation of a profile into a maximal chain of downsets, the
// interpolated value (generalized Choquet integral), and the classical,
// max-min and Möbius-form evaluations it reduces to.

#ifndef NATINTERP_INTERPOLATION_HPP_
#define NATINTERP_INTERPOLATION_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "natinterp/moebius.hpp"
#include "natinterp/poset.hpp"
#include "natinterp/rational.hpp"

namespace natinterp {

// A point of the realization C(J(L)): a nonincreasing map J(L) -> [0,1].
class Profile {
 public:
  // `values` is indexed by base element. Throws ValueOutOfRange,
  // NotNonincreasing, InvalidInput (size mismatch).
  Profile(std::shared_ptr<const Poset> base, std::vector<Rational> values);

  const Poset& base() const { return *base_; }
  const std::shared_ptr<const Poset>& base_ptr() const { return base_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }

  // Indicator 1_X of a downset, a vertex of the realization.
  static Profile vertex(std::shared_ptr<const Poset> base, Downset x);

 private:
  std::shared_ptr<const Poset> base_;
  std::vector<Rational> values_;
};

// The simplex of the natural triangulation containing a profile, with the
// barycentric weights of the profile in it.
struct ChainDecomposition {
  // π(1..M), stored 0-based: permutation[i] is the element added at step i+1.
  std::vector<Poset::Index> permutation;
  // inverse[j] = position of element j in `permutation`.
  std::vector<std::size_t> inverse;
  // X_0 = ∅ ⊂ X_1 ⊂ … ⊂ X_M = J(L).
  std::vector<Downset> chain;
  // α_0 … α_M, nonnegative, summing to one.
  std::vector<Rational> weights;

  // Σ_{i≥1} α_i 1_{X_i}, which is the profile again.
  std::vector<Rational> reconstruct(std::size_t base_size) const;
};

// Sorts by value descending, ties broken by the base's linear extension.
ChainDecomposition triangulate(const Profile& f);

// Same, but ties broken by `tie_order`, which must be a linear extension of
// the base (InvalidInput otherwise). Any choice yields a valid simplex.
ChainDecomposition triangulate(const Profile& f, std::span<const Poset::Index> tie_order);

// Σ_{i=0}^{M} α_i F(1_{X_i}), bottom term included.
Rational evaluate_on_chain(const GeneralizedCapacity& capacity,
                           const ChainDecomposition& decomposition);

// F̄(f). Throws BaseMismatch when F and f live on different posets.
Rational natural_extension(const GeneralizedCapacity& capacity, const Profile& f);

// The classical Choquet integral Σ [f(π(i)) − f(π(i+1))] ν(X_i) on a Boolean
// lattice (antichain base). Scores may exceed 1. Throws NegativeScore,
// InvalidInput (base not an antichain or size mismatch).
Rational choquet_classical(const GeneralizedCapacity& capacity,
                           std::span<const Rational> scores);

// max over downsets T with F(1_T) = 1 of min_{j∈T} f(j). An empty meet is 1
// and an empty join is 0. Throws NotZeroOne, NotMonotone.
Rational zero_one_maxmin(const GeneralizedCapacity& capacity, const Profile& f);

// Σ_x m(x) min_{j∈η(x)} f(j), with the empty meet at ⊥ equal to 1.
Rational moebius_form_eval(const MoebiusVector& coefficients, const Profile& f);

// min_{j∈x} f(j), or 1 for the empty set.
Rational meet_over(const Profile& f, Downset x);

// F̄ on many profiles at once (parallel when OpenMP is available).
std::vector<Rational> natural_extension_batch(const GeneralizedCapacity& capacity,
                                              std::span<const Profile> profiles);

// Checks that F and f share a base poset (same object or equal structure).
void require_same_base(const Poset& expected, const Poset& actual);

}  // namespace natinterp

#endif  // NATINTERP_INTERPOLATION_HPP_
