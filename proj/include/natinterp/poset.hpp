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

// Finite posets: validation, order relation, downsets, components and
// deterministic linear extensions.

#ifndef NATINTERP_POSET_HPP_
#define NATINTERP_POSET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace natinterp {

// Posets that serve as the base J(L) of a lattice are at most this large so
// that subsets fit in one machine word.
inline constexpr std::size_t kMaxBaseSize = 64;
inline constexpr std::size_t kDefaultDownsetCap = 1'000'000;

// A subset of the elements of a poset with at most kMaxBaseSize elements,
// bit i standing for element index i.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(std::size_t i) {
    return ElementSet(std::uint64_t{1} << i);
  }
  static constexpr ElementSet first_n(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet minus(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const ElementSet&) const = default;
  constexpr auto operator<=>(const ElementSet&) const = default;

  // Member indices in increasing order.
  std::vector<std::size_t> members() const;

 private:
  std::uint64_t bits_ = 0;
};

// Lattice elements are carried as downsets of the base poset.
using Downset = ElementSet;

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

class Poset {
 public:
  using Index = std::size_t;
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  // Validating constructor from cover pairs (lower, upper) given as indices.
  // Rejects cycles (CycleDetected), covers implied by others or repeated
  // (RedundantCover) and duplicate labels (DuplicateLabel).
  static Poset from_covers(std::vector<std::string> labels,
                           std::vector<std::pair<Index, Index>> covers);

  // Builds a poset from a complete order relation; the covers are derived as
  // its transitive reduction. `leq` must be a partial order (reflexivity and
  // antisymmetry are checked, transitivity is assumed).
  static Poset from_order(std::vector<std::string> labels,
                          const std::function<bool(Index, Index)>& leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Index i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> find(std::string_view label) const;
  // Throws UnknownLabel.
  Index index_of(std::string_view label) const;

  bool leq(Index lower, Index upper) const { return down_[upper].test(lower); }
  bool less(Index lower, Index upper) const { return lower != upper && leq(lower, upper); }
  bool comparable(Index a, Index b) const { return leq(a, b) || leq(b, a); }

  // Cover pairs (lower, upper), sorted.
  const std::vector<std::pair<Index, Index>>& covers() const { return covers_; }
  const std::vector<Index>& lower_covers(Index i) const { return lower_covers_[i]; }
  const std::vector<Index>& upper_covers(Index i) const { return upper_covers_[i]; }
  const Bits& down(Index i) const { return down_[i]; }
  const Bits& up(Index i) const { return up_[i]; }

  // Topological order with lexicographic label tie-break, computed once.
  const std::vector<Index>& linear_extension() const { return linear_extension_; }
  // Position of each element in linear_extension().
  const std::vector<std::size_t>& linear_position() const { return linear_position_; }
  // Rank of each label in lexicographic order.
  const std::vector<std::size_t>& label_rank() const { return label_rank_; }

  std::vector<Index> minimal_elements() const;
  std::vector<Index> maximal_elements() const;

  // The following require size() <= kMaxBaseSize.
  bool fits_in_word() const { return size() <= kMaxBaseSize; }
  ElementSet all() const { return ElementSet::first_n(size()); }
  ElementSet principal_downset(Index i) const;
  bool is_downset(ElementSet s) const;
  bool is_upset(ElementSet s) const;
  bool is_antichain(ElementSet s) const;
  // Members of s with no upper cover inside s.
  ElementSet maximal_in(ElementSet s) const;
  std::vector<std::string> labels_of(ElementSet s) const;

  // Same labels in the same order and the same covers.
  friend bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.covers_ == b.covers_;
  }

 private:
  Poset() = default;
  void finish();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
  std::vector<std::pair<Index, Index>> covers_;
  std::vector<std::vector<Index>> lower_covers_;
  std::vector<std::vector<Index>> upper_covers_;
  std::vector<Bits> down_;
  std::vector<Bits> up_;
  std::vector<Index> linear_extension_;
  std::vector<std::size_t> linear_position_;
  std::vector<std::size_t> label_rank_;
  std::vector<std::uint64_t> down_words_;  // principal downsets when fits_in_word()
};

// Label-level validating constructor. Throws UnknownLabel, DuplicateLabel,
// CycleDetected, RedundantCover.
Poset validate_poset(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& covers);

// Every downset exactly once, ordered by size and then lexicographically on
// the sorted member labels. Throws SizeLimitExceeded past `cap`.
std::vector<Downset> all_downsets(const Poset& poset, std::size_t cap = kDefaultDownsetCap);

// Number of downsets without materializing them. Same cap semantics.
std::size_t count_downsets(const Poset& poset, std::size_t cap = kDefaultDownsetCap);

struct Component {
  std::vector<Poset::Index> members;  // sorted by label
  std::vector<Poset::Index> minimal;  // sorted by label
};

// Connected components of the Hasse diagram, ordered by smallest label.
std::vector<Component> connected_components(const Poset& poset);

std::vector<Poset::Index> linear_extension(const Poset& poset);

// Hasse diagram as Graphviz digraph text, edges pointing upwards.
std::string to_dot(const Poset& poset, std::string_view graph_name = "hasse");

}  // namespace natinterp

#endif  // NATINTERP_POSET_HPP_
