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

// Finite distributive lattices in Birkhoff form: a lattice L is carried as the
// family O(J) of downsets of its poset of join-irreducibles J = J(L). Join is
// union and meet is intersection, so distributivity holds by construction.

#ifndef NATINTERP_BIRKHOFF_HPP_
#define NATINTERP_BIRKHOFF_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "natinterp/poset.hpp"

namespace natinterp {

class DownsetLattice {
 public:
  explicit DownsetLattice(std::shared_ptr<const Poset> base,
                          std::size_t cap = kDefaultDownsetCap);

  const Poset& base() const { return *base_; }
  const std::shared_ptr<const Poset>& base_ptr() const { return base_; }

  std::size_t size() const { return elements_.size(); }
  // Elements in all_downsets() order; index 0 is bottom, the last is top.
  const std::vector<Downset>& elements() const { return elements_; }
  Downset element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> find(Downset x) const;
  // Throws NotAnElement.
  std::size_t index_of(Downset x) const;

  Downset bottom() const { return Downset(); }
  Downset top() const { return base_->all(); }

  // η(x): the join-irreducibles below x. The identity in Birkhoff form, but it
  // validates that x is downward closed (NotAnElement otherwise).
  Downset eta(Downset x) const;
  Downset join(Downset x, Downset y) const;
  Downset meet(Downset x, Downset y) const;
  bool leq(Downset x, Downset y) const;

  // Text such as "{a,c}" or "{}" for the bottom.
  std::string element_label(Downset x) const;

  // The lattice itself as an explicit poset (labels from element_label),
  // elements in index order.
  Poset as_explicit_poset() const;

 private:
  std::shared_ptr<const Poset> base_;
  std::vector<Downset> elements_;
  std::unordered_map<Downset, std::size_t, ElementSetHash> index_;
};

struct ComplementPair {
  Downset element;
  Downset complement;
};

// Every complemented x with its unique complement x' = J \ η(x): the downsets
// whose set complement is also a downset.
std::vector<ComplementPair> complemented_elements(const DownsetLattice& lattice);

struct VerifiedLattice {
  std::shared_ptr<const DownsetLattice> lattice;
  // Explicit element label -> its η downset, in input element order.
  std::vector<std::pair<std::string, Downset>> dictionary;
  // Index in the explicit poset of each base element.
  std::vector<Poset::Index> join_irreducibles;
};

// Converts an explicitly given lattice to Birkhoff form. Throws NotALattice when
// some pair lacks a join or meet, NotDistributive when |L| != |O(J(L))|.
VerifiedLattice verify_distributive(const Poset& explicit_lattice,
                                    std::size_t cap = kDefaultDownsetCap);

}  // namespace natinterp

#endif  // NATINTERP_BIRKHOFF_HPP_
