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

// Möbius functions and transforms: the generic Rota recursion on any finite
// poset, the zeta/Möbius pair on a distributive lattice, the product formula on
// the bipolar extension, and unanimity bases. Everything is exact.

#ifndef NATINTERP_MOEBIUS_HPP_
#define NATINTERP_MOEBIUS_HPP_

#include <cstddef>
#include <memory>
#include <unordered_map>
#include <vector>

#include "natinterp/bipolar_extension.hpp"
#include "natinterp/birkhoff.hpp"
#include "natinterp/rational.hpp"

namespace natinterp {

// A real (rational) value on every element of a distributive lattice, i.e. a
// vertex functional F(1_X) on D(J(L)). Capacities, games and k-ary capacities
// are all of this type; the flags are computed, not stored.
class GeneralizedCapacity {
 public:
  // `values` is indexed like lattice->elements(). Throws InvalidInput on a size
  // mismatch.
  GeneralizedCapacity(std::shared_ptr<const DownsetLattice> lattice,
                      std::vector<Rational> values);

  const DownsetLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const DownsetLattice>& lattice_ptr() const { return lattice_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  // Throws NotAnElement.
  const Rational& value(Downset x) const { return values_[lattice_->index_of(x)]; }

  bool is_game() const { return values_.front() == 0; }
  bool is_monotone() const;

  // alpha * a + beta * b on a shared lattice (BaseMismatch otherwise).
  static GeneralizedCapacity linear_combination(const Rational& alpha,
                                                const GeneralizedCapacity& a,
                                                const Rational& beta,
                                                const GeneralizedCapacity& b);

 private:
  std::shared_ptr<const DownsetLattice> lattice_;
  std::vector<Rational> values_;
};

// Möbius coefficients of a lattice function: f(x) = Σ_{y≤x} µ(y,x) g(y).
class MoebiusVector {
 public:
  MoebiusVector(std::shared_ptr<const DownsetLattice> lattice,
                std::vector<Rational> coefficients);

  const DownsetLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const DownsetLattice>& lattice_ptr() const { return lattice_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& operator[](std::size_t i) const { return coefficients_[i]; }
  const Rational& coefficient(Downset x) const {
    return coefficients_[lattice_->index_of(x)];
  }

 private:
  std::shared_ptr<const DownsetLattice> lattice_;
  std::vector<Rational> coefficients_;
};

// Rota's recursion µ(x,x) = 1, µ(y,x) = -Σ_{y≤z<x} µ(y,z) on an arbitrary
// finite poset. Rows µ(y, ·) are computed on first use and cached in the
// context, so one context per thread.
class MoebiusContext {
 public:
  explicit MoebiusContext(const Poset& poset) : poset_(&poset) {}

  // Throws NotComparable unless lower ≤ upper.
  const Rational& operator()(Poset::Index lower, Poset::Index upper);

 private:
  const std::vector<Rational>& row(Poset::Index lower);

  const Poset* poset_;
  std::unordered_map<Poset::Index, std::vector<Rational>> rows_;
};

// One-shot generic Möbius function (fresh context).
Rational moebius_function(const Poset& poset, Poset::Index lower, Poset::Index upper);

// µ_L(y, x) on a distributive lattice in closed form: (-1)^{|x\y|} when x\y is
// an antichain of the base, 0 otherwise. Throws NotAnElement, NotComparable.
int lattice_moebius(const DownsetLattice& lattice, Downset lower, Downset upper);

MoebiusVector moebius_transform(const GeneralizedCapacity& capacity);
GeneralizedCapacity zeta_transform(const MoebiusVector& coefficients);

// u_x(y) = 1 iff y ≥ x. Throws NotAnElement.
GeneralizedCapacity unanimity(std::shared_ptr<const DownsetLattice> lattice, Downset x);

// A function on all of L̃ (the equivalent form F̃ of a bipolar functional).
class BipolarFunction {
 public:
  BipolarFunction(std::shared_ptr<const BipolarExtension> extension,
                  std::vector<Rational> values);

  const BipolarExtension& extension() const { return *extension_; }
  const std::shared_ptr<const BipolarExtension>& extension_ptr() const { return extension_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  const Rational& value(const BipolarElement& e) const {
    return values_[extension_->index_of(e)];
  }

 private:
  std::shared_ptr<const BipolarExtension> extension_;
  std::vector<Rational> values_;
};

// Bipolar Möbius coefficients m̃ on L̃.
class BipolarMoebiusVector {
 public:
  BipolarMoebiusVector(std::shared_ptr<const BipolarExtension> extension,
                       std::vector<Rational> coefficients);

  const BipolarExtension& extension() const { return *extension_; }
  const std::shared_ptr<const BipolarExtension>& extension_ptr() const { return extension_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& operator[](std::size_t i) const { return coefficients_[i]; }
  const Rational& coefficient(const BipolarElement& e) const {
    return coefficients_[extension_->index_of(e)];
  }

 private:
  std::shared_ptr<const BipolarExtension> extension_;
  std::vector<Rational> coefficients_;
};

// µ_L̃((z,t),(x,y)) = µ_L(z,x) µ_L(t,y). Throws NotInBipolarExtension,
// NotComparable.
int bipolar_moebius_function(const DownsetLattice& lattice, const BipolarElement& lower,
                             const BipolarElement& upper);

// m̃(x,y) = Σ_{(z,t)≤(x,y)} F̃(z,t) µ_L(z,x) µ_L(t,y).
BipolarMoebiusVector bipolar_moebius_transform(const BipolarFunction& function);
// f(x,y) = Σ_{(x',y')≤(x,y)} m̃(x',y').
BipolarFunction bipolar_zeta_transform(const BipolarMoebiusVector& coefficients);

// u_(x,y)(z,t) = 1 iff (z,t) ≥ (x,y). Throws NotInBipolarExtension.
BipolarFunction bipolar_unanimity(std::shared_ptr<const BipolarExtension> extension,
                                  const BipolarElement& at);

}  // namespace natinterp

#endif  // NATINTERP_MOEBIUS_HPP_
