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

#include "natinterp/bipolar.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

#include "natinterp/error.hpp"
#include "natinterp/kernels.hpp"

namespace natinterp {
namespace {

std::string pair_label(const DownsetLattice& lattice, const BipolarElement& e) {
  return "(" + lattice.element_label(e.pos) + "," + lattice.element_label(e.neg) + ")";
}

Downset checked_complement(const DownsetLattice& lattice, Downset x) {
  const Poset& base = lattice.base();
  Downset rest = base.all().minus(x);
  if (!x.is_subset_of(base.all()) || !base.is_downset(x) || !base.is_downset(rest)) {
    throw Error(ErrorCode::kNotComplemented, lattice.element_label(x) + " has no complement");
  }
  return rest;
}

}  // namespace

BipolarProfile::BipolarProfile(std::shared_ptr<const Poset> base, std::vector<Rational> values)
    : base_(std::move(base)), values_(std::move(values)) {
  if (!base_ || values_.size() != base_->size()) {
    throw Error(ErrorCode::kInvalidInput, "profile needs one value per base element");
  }
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (values_[j] < -1 || values_[j] > 1) {
      throw Error(ErrorCode::kValueOutOfRange,
                  "f(" + base_->label(j) + ") = " + to_string(values_[j]) + " is outside [-1,1]");
    }
  }
  for (auto [lower, upper] : base_->covers()) {
    if (abs_value(values_[lower]) < abs_value(values_[upper])) {
      throw Error(ErrorCode::kNotNonincreasing, "|f(" + base_->label(lower) + ")| < |f(" +
                                                    base_->label(upper) + ")|");
    }
  }
}

Profile BipolarProfile::magnitude() const {
  std::vector<Rational> out(values_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = abs_value(values_[j]);
  return Profile(base_, std::move(out));
}

Rational BipolarProfile::positive_part(std::size_t j) const {
  return values_[j] > 0 ? values_[j] : Rational(0);
}

Rational BipolarProfile::negative_part(std::size_t j) const {
  return values_[j] < 0 ? Rational(-values_[j]) : Rational(0);
}

bool is_regular_mosaic(const Poset& base) {
  for (const Component& c : connected_components(base)) {
    if (c.minimal.size() != 1) return false;
  }
  return true;
}

Tile::Tile(const DownsetLattice& lattice, Downset x)
    : lattice_(&lattice), x_(x), complement_(checked_complement(lattice, x)) {
  elements_.reserve(lattice.size());
  for (Downset w : lattice.elements()) elements_.push_back(phi_inverse(w));
}

bool Tile::contains(const BipolarElement& e) const {
  const Poset& base = lattice_->base();
  return e.pos.is_subset_of(x_) && e.neg.is_subset_of(complement_) && base.is_downset(e.pos) &&
         base.is_downset(e.neg);
}

Downset Tile::phi(const BipolarElement& e) const {
  if (!contains(e)) {
    throw Error(ErrorCode::kNotInTile, pair_label(*lattice_, e) + " is not in L(" +
                                           lattice_->element_label(x_) + ")");
  }
  return e.pos | e.neg;
}

BipolarElement Tile::phi_inverse(Downset w) const {
  lattice_->eta(w);
  return {w & x_, w & complement_};
}

std::vector<BipolarElement> tile_union(const DownsetLattice& lattice) {
  std::set<BipolarElement> out;
  for (const ComplementPair& c : complemented_elements(lattice)) {
    Tile t(lattice, c.element);
    out.insert(t.elements().begin(), t.elements().end());
  }
  return {out.begin(), out.end()};
}

BipolarElement psi(const DownsetLattice& lattice, Downset x, const TernaryVertex& xi) {
  const Poset& base = lattice.base();
  Downset rest = checked_complement(lattice, x);
  if (xi.size() != base.size()) {
    throw Error(ErrorCode::kInvalidInput, "ternary vertex needs one entry per base element");
  }
  BipolarElement e;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    if (xi[j] == 1) {
      if (!x.contains(j)) {
        throw Error(ErrorCode::kSignConstraintViolated,
                    "positive entry at " + base.label(j) + " outside " + lattice.element_label(x));
      }
      e.pos |= Downset::singleton(j);
    } else if (xi[j] == -1) {
      if (!rest.contains(j)) {
        throw Error(ErrorCode::kSignConstraintViolated, "negative entry at " + base.label(j) +
                                                            " outside " +
                                                            lattice.element_label(rest));
      }
      e.neg |= Downset::singleton(j);
    } else if (xi[j] != 0) {
      throw Error(ErrorCode::kInvalidInput, "ternary vertex entries must be -1, 0 or 1");
    }
  }
  if (!base.is_downset(e.pos | e.neg)) {
    throw Error(ErrorCode::kNotNonincreasing, "|ξ| is not nonincreasing");
  }
  return e;
}

TernaryVertex psi_inverse(const DownsetLattice& lattice, Downset x, const BipolarElement& e) {
  Tile t(lattice, x);
  if (!t.contains(e)) {
    throw Error(ErrorCode::kNotInTile, pair_label(lattice, e) + " is not in L(" +
                                           lattice.element_label(x) + ")");
  }
  TernaryVertex xi(lattice.base().size(), 0);
  for (std::size_t j : e.pos.members()) xi[j] = 1;
  for (std::size_t j : e.neg.members()) xi[j] = -1;
  return xi;
}

BipolarCapacity::BipolarCapacity(std::shared_ptr<const DownsetLattice> lattice,
                                 std::vector<std::pair<BipolarElement, Rational>> entries)
    : lattice_(std::move(lattice)), domain_(tile_union(*lattice_)) {
  for (std::size_t i = 0; i < domain_.size(); ++i) index_.emplace(domain_[i], i);
  std::vector<std::optional<Rational>> seen(domain_.size());
  for (auto& [key, value] : entries) {
    auto it = index_.find(key);
    if (it == index_.end()) {
      throw Error(ErrorCode::kNotInTile, pair_label(*lattice_, key) + " lies in no tile");
    }
    auto& slot = seen[it->second];
    if (slot && *slot != value) {
      throw Error(ErrorCode::kConflictingValues, pair_label(*lattice_, key) + " is given " +
                                                     to_string(*slot) + " and " +
                                                     to_string(value));
    }
    slot = std::move(value);
  }
  values_.reserve(domain_.size());
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::kMissingValue, "no value for " + pair_label(*lattice_, domain_[i]));
    }
    values_.push_back(std::move(*seen[i]));
  }
}

BipolarCapacity BipolarCapacity::from_function(const BipolarFunction& function) {
  const BipolarExtension& ext = function.extension();
  std::vector<std::pair<BipolarElement, Rational>> entries;
  for (const BipolarElement& e : tile_union(ext.lattice())) {
    entries.emplace_back(e, function.value(e));
  }
  return BipolarCapacity(ext.lattice_ptr(), std::move(entries));
}

BipolarFunction BipolarCapacity::to_function(
    std::shared_ptr<const BipolarExtension> extension) const {
  std::vector<Rational> out;
  out.reserve(extension->size());
  for (const BipolarElement& e : extension->elements()) {
    auto it = index_.find(e);
    if (it == index_.end()) {
      throw Error(ErrorCode::kNotRegularMosaic,
                  pair_label(*lattice_, e) + " of L̃ lies in no tile");
    }
    out.push_back(values_[it->second]);
  }
  return BipolarFunction(std::move(extension), std::move(out));
}

const Rational& BipolarCapacity::value(const BipolarElement& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) {
    throw Error(ErrorCode::kNotInTile, pair_label(*lattice_, e) + " lies in no tile");
  }
  return values_[it->second];
}

bool BipolarCapacity::is_normalized() const {
  Downset top = lattice_->top();
  return value({top, Downset()}) == 1 && value({Downset(), top}) == -1;
}

Downset select_tile(const BipolarProfile& f) {
  const Poset& base = f.base();
  if (!is_regular_mosaic(base)) {
    throw Error(ErrorCode::kNotRegularMosaic,
                "some component of the base has several minimal elements");
  }
  Downset x;
  for (const Component& c : connected_components(base)) {
    bool positive = false;
    bool negative = false;
    for (auto j : c.members) {
      positive = positive || f[j] > 0;
      negative = negative || f[j] < 0;
    }
    if (positive && negative) {
      throw Error(ErrorCode::kProfileNotInAnyTile,
                  "component of " + base.label(c.minimal.front()) + " has both signs");
    }
    if (!negative) {
      for (auto j : c.members) x |= Downset::singleton(j);
    }
  }
  return x;
}

bool in_tile(const BipolarProfile& f, Downset x) {
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (x.contains(j) ? f[j] < 0 : f[j] > 0) return false;
  }
  return true;
}

BipolarEvaluation bipolar_natural_extension_on_tile(const BipolarCapacity& capacity,
                                                    const BipolarProfile& f, Downset x) {
  require_same_base(capacity.base(), f.base());
  Tile t(capacity.lattice(), x);
  if (!in_tile(f, x)) {
    throw Error(ErrorCode::kSignConstraintViolated,
                "profile is not in C_x for x = " + capacity.lattice().element_label(x));
  }
  BipolarEvaluation out{x, triangulate(f.magnitude()), {}, 0};
  out.vertices.reserve(out.decomposition.chain.size());
  for (std::size_t i = 0; i < out.decomposition.chain.size(); ++i) {
    out.vertices.push_back(t.phi_inverse(out.decomposition.chain[i]));
    if (out.decomposition.weights[i] != 0) {
      out.value += out.decomposition.weights[i] * capacity.value(out.vertices.back());
    }
  }
  return out;
}

BipolarEvaluation bipolar_natural_extension_detailed(const BipolarCapacity& capacity,
                                                     const BipolarProfile& f) {
  require_same_base(capacity.base(), f.base());
  return bipolar_natural_extension_on_tile(capacity, f, select_tile(f));
}

Rational bipolar_natural_extension(const BipolarCapacity& capacity, const BipolarProfile& f) {
  return bipolar_natural_extension_detailed(capacity, f).value;
}

GeneralizedCapacity pull_back(const BipolarCapacity& capacity, Downset x) {
  Tile t(capacity.lattice(), x);
  std::vector<Rational> values;
  values.reserve(capacity.lattice().size());
  for (Downset w : capacity.lattice().elements()) values.push_back(capacity.value(t.phi_inverse(w)));
  return GeneralizedCapacity(capacity.lattice_ptr(), std::move(values));
}

Rational bicapacity_choquet(const BipolarFunction& v, std::span<const Rational> scores) {
  const DownsetLattice& lattice = v.extension().lattice();
  if (scores.size() != lattice.base().size()) {
    throw Error(ErrorCode::kInvalidInput, "one score per criterion is required");
  }
  Downset positive;
  std::vector<Rational> magnitude(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] >= 0) positive |= Downset::singleton(i);
    magnitude[i] = abs_value(scores[i]);
  }
  std::vector<Rational> induced;
  induced.reserve(lattice.size());
  for (Downset c : lattice.elements()) {
    induced.push_back(v.value({c & positive, c.minus(positive)}));
  }
  return choquet_classical(GeneralizedCapacity(v.extension().lattice_ptr(), std::move(induced)),
                           magnitude);
}

Rational bipolar_moebius_form_eval(const BipolarMoebiusVector& coefficients,
                                   const BipolarProfile& f) {
  const BipolarExtension& ext = coefficients.extension();
  require_same_base(ext.base(), f.base());
  Rational sum = 0;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    if (coefficients[i] == 0) continue;
    const BipolarElement& e = ext.element(i);
    Rational low = 1;
    for (std::size_t j : e.pos.members()) low = std::min(low, f.positive_part(j));
    for (std::size_t j : e.neg.members()) low = std::min(low, f.negative_part(j));
    sum += coefficients[i] * low;
  }
  return sum;
}

BipolarProfile embed_profile(const DownsetLattice& lattice, const Profile& f, Downset x) {
  require_same_base(lattice.base(), f.base());
  Tile t(lattice, x);
  ChainDecomposition d = triangulate(f);
  std::vector<Rational> out(f.size());
  for (std::size_t i = 1; i < d.chain.size(); ++i) {
    BipolarElement v = t.phi_inverse(d.chain[i]);
    for (std::size_t j : v.pos.members()) out[j] += d.weights[i];
    for (std::size_t j : v.neg.members()) out[j] -= d.weights[i];
  }
  return BipolarProfile(f.base_ptr(), std::move(out));
}

std::vector<Rational> bipolar_natural_extension_batch(const BipolarCapacity& capacity,
                                                      std::span<const BipolarProfile> profiles) {
  return kernels::bipolar_natural_extension_batch(capacity, profiles);
}

}  // namespace natinterp
