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

// Bipolarization: tiles L(x) of the bipolar extension, regular mosaics,
// ternary vertices, bipolar profiles and capacities, and the bipolar natural
// extension with its Möbius form and the Boolean bicapacity integral.

#ifndef NATINTERP_BIPOLAR_HPP_
#define NATINTERP_BIPOLAR_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "natinterp/bipolar_extension.hpp"
#include "natinterp/birkhoff.hpp"
#include "natinterp/interpolation.hpp"
#include "natinterp/moebius.hpp"
#include "natinterp/rational.hpp"

namespace natinterp {

// A map J(L) -> [-1,1] with |f| nonincreasing.
class BipolarProfile {
 public:
  // Throws ValueOutOfRange, NotNonincreasing, InvalidInput.
  BipolarProfile(std::shared_ptr<const Poset> base, std::vector<Rational> values);

  const Poset& base() const { return *base_; }
  const std::shared_ptr<const Poset>& base_ptr() const { return base_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t j) const { return values_[j]; }
  std::size_t size() const { return values_.size(); }

  // |f| as a unipolar profile.
  Profile magnitude() const;
  // f⁺ = f ∨ 0 and f⁻ = (−f) ∨ 0.
  Rational positive_part(std::size_t j) const;
  Rational negative_part(std::size_t j) const;

 private:
  std::shared_ptr<const Poset> base_;
  std::vector<Rational> values_;
};

// Every connected component of the base has a single minimal element.
bool is_regular_mosaic(const Poset& base);

// The interval L(x) = [(⊥,⊥), (x,x′)] of L̃ for a complemented x.
class Tile {
 public:
  // Throws NotComplemented.
  Tile(const DownsetLattice& lattice, Downset x);

  Downset x() const { return x_; }
  Downset complement() const { return complement_; }
  BipolarElement top() const { return {x_, complement_}; }
  // Enumerated through φ_x⁻¹ over L, in lattice order.
  const std::vector<BipolarElement>& elements() const { return elements_; }
  bool contains(const BipolarElement& e) const;

  // φ_x(y,z) = y ∨ z. Throws NotInTile.
  Downset phi(const BipolarElement& e) const;
  // φ_x⁻¹(w) = (w ∧ x, w ∧ x′). Throws NotAnElement.
  BipolarElement phi_inverse(Downset w) const;

 private:
  const DownsetLattice* lattice_;
  Downset x_;
  Downset complement_;
  std::vector<BipolarElement> elements_;
};

// ⋃_{x∈c(L)} L(x), sorted, each element once.
std::vector<BipolarElement> tile_union(const DownsetLattice& lattice);

// A ternary vertex ξ: J(L) -> {-1,0,1}.
using TernaryVertex = std::vector<int>;

// ψ_x(ξ) = (η⁻¹(ξ⁻¹(1)), η⁻¹(ξ⁻¹(−1))). Throws SignConstraintViolated when ξ
// breaks the sign rule of tile x, NotNonincreasing when |ξ| is not, and
// NotComplemented.
BipolarElement psi(const DownsetLattice& lattice, Downset x, const TernaryVertex& xi);
// ξ = 1_{η(y)} − 1_{η(z)}. Throws NotInTile, NotComplemented.
TernaryVertex psi_inverse(const DownsetLattice& lattice, Downset x, const BipolarElement& e);

// A bipolar vertex functional: one value per element of ⋃ L(x), i.e. per
// admissible ternary vertex 1_A − 1_B, stored once even where tiles overlap.
class BipolarCapacity {
 public:
  // `entries` must cover tile_union(lattice) exactly. Repeated keys must carry
  // equal values. Throws MissingValue, NotInTile, ConflictingValues.
  BipolarCapacity(std::shared_ptr<const DownsetLattice> lattice,
                  std::vector<std::pair<BipolarElement, Rational>> entries);

  // Restriction of a function on all of L̃.
  static BipolarCapacity from_function(const BipolarFunction& function);
  // The function on L̃. Throws NotRegularMosaic unless the tiles cover L̃.
  BipolarFunction to_function(std::shared_ptr<const BipolarExtension> extension) const;

  const DownsetLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const DownsetLattice>& lattice_ptr() const { return lattice_; }
  const Poset& base() const { return lattice_->base(); }

  // Sorted domain and the matching values.
  const std::vector<BipolarElement>& domain() const { return domain_; }
  const std::vector<Rational>& values() const { return values_; }
  // Throws NotInTile.
  const Rational& value(const BipolarElement& e) const;

  bool is_game() const { return value({Downset(), Downset()}) == 0; }
  // v(⊤,⊥) = 1 and v(⊥,⊤) = −1. Informational, never enforced.
  bool is_normalized() const;

 private:
  std::shared_ptr<const DownsetLattice> lattice_;
  std::vector<BipolarElement> domain_;
  std::vector<Rational> values_;
  std::unordered_map<BipolarElement, std::size_t, BipolarElementHash> index_;
};

// The complemented x with η(x) the union of the components on which f has no
// strictly negative value. Throws NotRegularMosaic, ProfileNotInAnyTile.
Downset select_tile(const BipolarProfile& f);

// f ∈ C_x.
bool in_tile(const BipolarProfile& f, Downset x);

struct BipolarEvaluation {
  Downset tile;
  ChainDecomposition decomposition;  // of |f|
  // ψ_x of each chain vertex X_i: (X_i ∩ η(x), X_i ∩ η(x′)).
  std::vector<BipolarElement> vertices;
  Rational value;
};

// Σ_{i=0}^{M} α_i F(X_i ∩ η(x), X_i ∩ η(x′)) for the selected tile x.
Rational bipolar_natural_extension(const BipolarCapacity& capacity, const BipolarProfile& f);
BipolarEvaluation bipolar_natural_extension_detailed(const BipolarCapacity& capacity,
                                                     const BipolarProfile& f);
// Through a caller-chosen tile. Throws SignConstraintViolated when f ∉ C_x.
BipolarEvaluation bipolar_natural_extension_on_tile(const BipolarCapacity& capacity,
                                                    const BipolarProfile& f, Downset x);

// F_x(1_X) = F(X ∩ η(x), X ∩ η(x′)) as a functional on L.
GeneralizedCapacity pull_back(const BipolarCapacity& capacity, Downset x);

// ∫ |f| dν with ν(C) = v(C ∩ N⁺, C ∩ N⁻), N⁺ = {f ≥ 0}, on a Boolean base.
Rational bicapacity_choquet(const BipolarFunction& v, std::span<const Rational> scores);

// Σ m̃(s,t) [min_{η(s)} f⁺ ∧ min_{η(t)} f⁻], empty meets equal to 1.
Rational bipolar_moebius_form_eval(const BipolarMoebiusVector& coefficients,
                                   const BipolarProfile& f);

// f_x = Σ α_i (1_{X_i∩η(x)} − 1_{X_i∩η(x′)}) from the triangulation of f.
// Throws NotComplemented.
BipolarProfile embed_profile(const DownsetLattice& lattice, const Profile& f, Downset x);

std::vector<Rational> bipolar_natural_extension_batch(const BipolarCapacity& capacity,
                                                      std::span<const BipolarProfile> profiles);

}  // namespace natinterp

#endif  // NATINTERP_BIPOLAR_HPP_
