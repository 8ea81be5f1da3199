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

#ifndef NATINTERP_BIPOLAR_EXTENSION_HPP_
#define NATINTERP_BIPOLAR_EXTENSION_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "natinterp/birkhoff.hpp"

namespace natinterp {

// A pair (x, y) of lattice elements with x ∧ y = ⊥, i.e. disjoint η sets. As a
// ternary vertex it is ξ = 1_pos - 1_neg.
struct BipolarElement {
  Downset pos;
  Downset neg;

  bool operator==(const BipolarElement&) const = default;
  auto operator<=>(const BipolarElement&) const = default;
};

struct BipolarElementHash {
  std::size_t operator()(const BipolarElement& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.pos.bits() * 0x9E3779B97F4A7C15ULL ^ e.neg.bits());
  }
};

// Product order on pairs.
inline bool bipolar_leq(const BipolarElement& a, const BipolarElement& b) {
  return a.pos.is_subset_of(b.pos) && a.neg.is_subset_of(b.neg);
}

// The bipolar extension L̃ = {(x, y) | x ∧ y = ⊥} of a distributive lattice,
// fully enumerated, with the product order. An inf-semilattice with bottom
// (⊥, ⊥); a lattice only when L is trivial.
class BipolarExtension {
 public:
  // Throws SizeLimitExceeded when |L̃| would exceed `cap`.
  explicit BipolarExtension(std::shared_ptr<const DownsetLattice> lattice,
                            std::size_t cap = kDefaultDownsetCap);

  const DownsetLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const DownsetLattice>& lattice_ptr() const { return lattice_; }
  const Poset& base() const { return lattice_->base(); }

  std::size_t size() const { return elements_.size(); }
  const std::vector<BipolarElement>& elements() const { return elements_; }
  const BipolarElement& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> find(const BipolarElement& e) const;
  // Throws NotInBipolarExtension.
  std::size_t index_of(const BipolarElement& e) const;
  bool contains(const BipolarElement& e) const { return find(e).has_value(); }

  // {(j, ⊥)} ∪ {(⊥, j)} for the join-irreducibles j of L.
  std::vector<BipolarElement> join_irreducibles() const;

  // "({a},{c})".
  std::string label(const BipolarElement& e) const;

  // L̃ as an explicit poset, elements in index order.
  Poset as_poset() const;

 private:
  std::shared_ptr<const DownsetLattice> lattice_;
  std::vector<BipolarElement> elements_;
  std::unordered_map<BipolarElement, std::size_t, BipolarElementHash> index_;
};

}  // namespace natinterp

#endif  // NATINTERP_BIPOLAR_EXTENSION_HPP_
