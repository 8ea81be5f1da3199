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

#include "natinterp/moebius.hpp"

#include "natinterp/error.hpp"
#include "natinterp/kernels.hpp"

namespace natinterp {

GeneralizedCapacity::GeneralizedCapacity(std::shared_ptr<const DownsetLattice> lattice,
                                         std::vector<Rational> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
  if (!lattice_ || values_.size() != lattice_->size()) {
    throw Error(ErrorCode::kInvalidInput, "capacity needs one value per lattice element");
  }
}

bool GeneralizedCapacity::is_monotone() const {
  const Poset& base = lattice_->base();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    Downset x = lattice_->element(i);
    // Checking covers x ⋖ x ∪ {j} suffices.
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (x.contains(j)) continue;
      Downset y = x | Downset::singleton(j);
      if (auto k = lattice_->find(y); k && values_[*k] < values_[i]) return false;
    }
  }
  return true;
}

GeneralizedCapacity GeneralizedCapacity::linear_combination(const Rational& alpha,
                                                            const GeneralizedCapacity& a,
                                                            const Rational& beta,
                                                            const GeneralizedCapacity& b) {
  if (a.lattice_ != b.lattice_ && a.lattice().base() != b.lattice().base()) {
    throw Error(ErrorCode::kBaseMismatch, "capacities live on different lattices");
  }
  std::vector<Rational> out(a.values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = alpha * a.values_[i] + beta * b.values_[i];
  return GeneralizedCapacity(a.lattice_, std::move(out));
}

MoebiusVector::MoebiusVector(std::shared_ptr<const DownsetLattice> lattice,
                             std::vector<Rational> coefficients)
    : lattice_(std::move(lattice)), coefficients_(std::move(coefficients)) {
  if (!lattice_ || coefficients_.size() != lattice_->size()) {
    throw Error(ErrorCode::kInvalidInput, "Möbius vector needs one coefficient per element");
  }
}

const Rational& MoebiusContext::operator()(Poset::Index lower, Poset::Index upper) {
  if (lower >= poset_->size() || upper >= poset_->size()) {
    throw Error(ErrorCode::kNotAnElement, "Möbius function index out of range");
  }
  if (!poset_->leq(lower, upper)) {
    throw Error(ErrorCode::kNotComparable, "\"" + poset_->label(lower) + "\" is not below \"" +
                                               poset_->label(upper) + "\"");
  }
  return row(lower)[upper];
}

const std::vector<Rational>& MoebiusContext::row(Poset::Index lower) {
  auto it = rows_.find(lower);
  if (it != rows_.end()) return it->second;

  std::vector<Rational> mu(poset_->size());
  const Poset::Bits& above = poset_->up(lower);
  // Linear-extension order guarantees every z in [lower, x) is done before x.
  for (Poset::Index x : poset_->linear_extension()) {
    if (!above.test(x)) continue;
    if (x == lower) {
      mu[x] = 1;
      continue;
    }
    Poset::Bits interval = above & poset_->down(x);
    interval.reset(x);
    Rational sum = 0;
    for (auto z = interval.find_first(); z != Poset::Bits::npos; z = interval.find_next(z)) {
      sum += mu[z];
    }
    mu[x] = -sum;
  }
  return rows_.emplace(lower, std::move(mu)).first->second;
}

Rational moebius_function(const Poset& poset, Poset::Index lower, Poset::Index upper) {
  MoebiusContext context(poset);
  return context(lower, upper);
}

int lattice_moebius(const DownsetLattice& lattice, Downset lower, Downset upper) {
  lattice.eta(lower);
  lattice.eta(upper);
  if (!lower.is_subset_of(upper)) {
    throw Error(ErrorCode::kNotComparable, lattice.element_label(lower) + " is not below " +
                                               lattice.element_label(upper));
  }
  Downset gap = upper.minus(lower);
  if (!lattice.base().is_antichain(gap)) return 0;
  return gap.size() % 2 == 0 ? 1 : -1;
}

MoebiusVector moebius_transform(const GeneralizedCapacity& capacity) {
  return MoebiusVector(capacity.lattice_ptr(),
                       kernels::moebius_transform(capacity.lattice(), capacity.values()));
}

GeneralizedCapacity zeta_transform(const MoebiusVector& coefficients) {
  return GeneralizedCapacity(
      coefficients.lattice_ptr(),
      kernels::zeta_transform(coefficients.lattice(), coefficients.coefficients()));
}

GeneralizedCapacity unanimity(std::shared_ptr<const DownsetLattice> lattice, Downset x) {
  lattice->index_of(x);
  std::vector<Rational> values(lattice->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = x.is_subset_of(lattice->element(i)) ? 1 : 0;
  }
  return GeneralizedCapacity(std::move(lattice), std::move(values));
}

BipolarFunction::BipolarFunction(std::shared_ptr<const BipolarExtension> extension,
                                 std::vector<Rational> values)
    : extension_(std::move(extension)), values_(std::move(values)) {
  if (!extension_ || values_.size() != extension_->size()) {
    throw Error(ErrorCode::kInvalidInput, "bipolar function needs one value per element of L̃");
  }
}

BipolarMoebiusVector::BipolarMoebiusVector(std::shared_ptr<const BipolarExtension> extension,
                                           std::vector<Rational> coefficients)
    : extension_(std::move(extension)), coefficients_(std::move(coefficients)) {
  if (!extension_ || coefficients_.size() != extension_->size()) {
    throw Error(ErrorCode::kInvalidInput,
                "bipolar Möbius vector needs one coefficient per element of L̃");
  }
}

int bipolar_moebius_function(const DownsetLattice& lattice, const BipolarElement& lower,
                             const BipolarElement& upper) {
  for (const BipolarElement* e : {&lower, &upper}) {
    if (!lattice.base().is_downset(e->pos) || !lattice.base().is_downset(e->neg) ||
        e->pos.intersects(e->neg)) {
      throw Error(ErrorCode::kNotInBipolarExtension,
                  "(" + lattice.element_label(e->pos) + "," + lattice.element_label(e->neg) +
                      ") is not in the bipolar extension");
    }
  }
  if (!bipolar_leq(lower, upper)) {
    throw Error(ErrorCode::kNotComparable, "bipolar elements are not comparable");
  }
  return lattice_moebius(lattice, lower.pos, upper.pos) *
         lattice_moebius(lattice, lower.neg, upper.neg);
}

BipolarMoebiusVector bipolar_moebius_transform(const BipolarFunction& function) {
  return BipolarMoebiusVector(
      function.extension_ptr(),
      kernels::bipolar_moebius_transform(function.extension(), function.values()));
}

BipolarFunction bipolar_zeta_transform(const BipolarMoebiusVector& coefficients) {
  return BipolarFunction(
      coefficients.extension_ptr(),
      kernels::bipolar_zeta_transform(coefficients.extension(), coefficients.coefficients()));
}

BipolarFunction bipolar_unanimity(std::shared_ptr<const BipolarExtension> extension,
                                  const BipolarElement& at) {
  extension->index_of(at);
  std::vector<Rational> values(extension->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = bipolar_leq(at, extension->element(i)) ? 1 : 0;
  }
  return BipolarFunction(std::move(extension), std::move(values));
}

}  // namespace natinterp
