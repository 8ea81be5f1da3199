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

#include "natinterp/bipolar_extension.hpp"

#include "natinterp/error.hpp"

namespace natinterp {

BipolarExtension::BipolarExtension(std::shared_ptr<const DownsetLattice> lattice,
                                   std::size_t cap)
    : lattice_(std::move(lattice)) {
  if (!lattice_) throw Error(ErrorCode::kInvalidInput, "bipolar extension needs a lattice");
  const auto& elems = lattice_->elements();
  for (Downset x : elems) {
    for (Downset y : elems) {
      if (x.intersects(y)) continue;
      if (elements_.size() == cap) {
        throw Error(ErrorCode::kSizeLimitExceeded,
                    "bipolar extension has more than " + std::to_string(cap) + " elements");
      }
      elements_.push_back({x, y});
    }
  }
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::optional<std::size_t> BipolarExtension::find(const BipolarElement& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t BipolarExtension::index_of(const BipolarElement& e) const {
  auto i = find(e);
  if (!i) {
    throw Error(ErrorCode::kNotInBipolarExtension,
                label(e) + " is not in the bipolar extension");
  }
  return *i;
}

std::vector<BipolarElement> BipolarExtension::join_irreducibles() const {
  std::vector<BipolarElement> out;
  const Poset& b = base();
  for (auto j : b.linear_extension()) out.push_back({b.principal_downset(j), Downset()});
  for (auto j : b.linear_extension()) out.push_back({Downset(), b.principal_downset(j)});
  return out;
}

std::string BipolarExtension::label(const BipolarElement& e) const {
  return "(" + lattice_->element_label(e.pos) + "," + lattice_->element_label(e.neg) + ")";
}

Poset BipolarExtension::as_poset() const {
  std::vector<std::string> labels;
  labels.reserve(size());
  for (const auto& e : elements_) labels.push_back(label(e));
  return Poset::from_order(std::move(labels), [this](std::size_t a, std::size_t b) {
    return bipolar_leq(elements_[a], elements_[b]);
  });
}

}  // namespace natinterp
