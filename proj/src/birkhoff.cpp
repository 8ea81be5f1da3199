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

#include "natinterp/birkhoff.hpp"

#include <algorithm>

#include "natinterp/error.hpp"

namespace natinterp {

DownsetLattice::DownsetLattice(std::shared_ptr<const Poset> base, std::size_t cap)
    : base_(std::move(base)) {
  if (!base_) throw Error(ErrorCode::kInvalidInput, "lattice needs a base poset");
  elements_ = all_downsets(*base_, cap);
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::size_t> DownsetLattice::find(Downset x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DownsetLattice::index_of(Downset x) const {
  auto i = find(x);
  if (!i) {
    throw Error(ErrorCode::kNotAnElement,
                element_label(x) + " is not a downset of the base");
  }
  return *i;
}

Downset DownsetLattice::eta(Downset x) const {
  if (!base_->is_downset(x)) {
    throw Error(ErrorCode::kNotAnElement, "set is not downward closed");
  }
  return x;
}

Downset DownsetLattice::join(Downset x, Downset y) const { return eta(x) | eta(y); }

Downset DownsetLattice::meet(Downset x, Downset y) const { return eta(x) & eta(y); }

bool DownsetLattice::leq(Downset x, Downset y) const { return eta(x).is_subset_of(eta(y)); }

std::string DownsetLattice::element_label(Downset x) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : base_->labels_of(x & base_->all())) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

Poset DownsetLattice::as_explicit_poset() const {
  std::vector<std::string> labels;
  labels.reserve(size());
  for (Downset d : elements_) labels.push_back(element_label(d));
  return Poset::from_order(std::move(labels), [this](std::size_t a, std::size_t b) {
    return elements_[a].is_subset_of(elements_[b]);
  });
}

std::vector<ComplementPair> complemented_elements(const DownsetLattice& lattice) {
  std::vector<ComplementPair> out;
  const Poset& base = lattice.base();
  for (Downset d : lattice.elements()) {
    Downset rest = base.all().minus(d);
    if (base.is_downset(rest)) out.push_back({d, rest});
  }
  return out;
}

VerifiedLattice verify_distributive(const Poset& lattice, std::size_t cap) {
  const std::size_t m = lattice.size();
  if (m == 0) throw Error(ErrorCode::kNotALattice, "empty poset is not a lattice");

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      Poset::Bits upper = lattice.up(a) & lattice.up(b);
      Poset::Bits lower = lattice.down(a) & lattice.down(b);
      bool has_join = false;
      for (auto u = upper.find_first(); u != Poset::Bits::npos; u = upper.find_next(u)) {
        if (lattice.up(u).count() == upper.count()) {
          has_join = true;
          break;
        }
      }
      bool has_meet = false;
      for (auto l = lower.find_first(); l != Poset::Bits::npos; l = lower.find_next(l)) {
        if (lattice.down(l).count() == lower.count()) {
          has_meet = true;
          break;
        }
      }
      if (!has_join || !has_meet) {
        throw Error(ErrorCode::kNotALattice, std::string("elements \"") + lattice.label(a) +
                                                 "\" and \"" + lattice.label(b) + "\" have no " +
                                                 (has_join ? "meet" : "join"));
      }
    }
  }

  VerifiedLattice out;
  for (std::size_t x = 0; x < m; ++x) {
    if (lattice.lower_covers(x).size() == 1) out.join_irreducibles.push_back(x);
  }
  const auto& ji = out.join_irreducibles;
  std::vector<std::string> labels;
  for (auto j : ji) labels.push_back(lattice.label(j));
  auto base = std::make_shared<const Poset>(Poset::from_order(
      std::move(labels), [&](std::size_t a, std::size_t b) { return lattice.leq(ji[a], ji[b]); }));

  if (!base->fits_in_word()) {
    throw Error(ErrorCode::kSizeLimitExceeded, "lattice has more than " +
                                                   std::to_string(kMaxBaseSize) +
                                                   " join-irreducible elements");
  }
  std::size_t downsets = count_downsets(*base, cap);
  if (downsets != m) {
    throw Error(ErrorCode::kNotDistributive,
                "lattice has " + std::to_string(m) + " elements but its join-irreducibles " +
                    "generate " + std::to_string(downsets) + " downsets");
  }
  out.lattice = std::make_shared<const DownsetLattice>(base, cap);
  for (std::size_t x = 0; x < m; ++x) {
    Downset eta;
    for (std::size_t t = 0; t < ji.size(); ++t) {
      if (lattice.leq(ji[t], x)) eta |= Downset::singleton(t);
    }
    out.dictionary.emplace_back(lattice.label(x), eta);
  }
  return out;
}

}  // namespace natinterp
