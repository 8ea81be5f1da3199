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

// Data-parallel kernels behind the public transforms and batch evaluators.
//
// natinterp::kernels is what the library calls: OpenMP-parallel over output
// elements (or over profiles), and for the Möbius transforms it only visits
// the nonzero terms y = x \ S with S a set of maximal elements of x.
// natinterp::reference holds the straightforward serial versions (full scan
// with the closed-form µ), kept for tests and the benchmark.

#ifndef NATINTERP_KERNELS_HPP_
#define NATINTERP_KERNELS_HPP_

#include <span>
#include <vector>

#include "natinterp/bipolar_extension.hpp"
#include "natinterp/birkhoff.hpp"
#include "natinterp/rational.hpp"

namespace natinterp {

class GeneralizedCapacity;
class Profile;
class BipolarCapacity;
class BipolarProfile;

namespace kernels {

std::vector<Rational> moebius_transform(const DownsetLattice& lattice,
                                        std::span<const Rational> values);
std::vector<Rational> zeta_transform(const DownsetLattice& lattice,
                                     std::span<const Rational> coefficients);
std::vector<Rational> bipolar_moebius_transform(const BipolarExtension& extension,
                                                std::span<const Rational> values);
std::vector<Rational> bipolar_zeta_transform(const BipolarExtension& extension,
                                             std::span<const Rational> coefficients);

// Validation errors from any profile are rethrown after the parallel loop.
std::vector<Rational> natural_extension_batch(const GeneralizedCapacity& capacity,
                                              std::span<const Profile> profiles);
std::vector<Rational> bipolar_natural_extension_batch(const BipolarCapacity& capacity,
                                                      std::span<const BipolarProfile> profiles);

// Number of threads an OpenMP region would use (1 without OpenMP).
int max_threads();

}  // namespace kernels

namespace reference {

std::vector<Rational> moebius_transform(const DownsetLattice& lattice,
                                        std::span<const Rational> values);
std::vector<Rational> zeta_transform(const DownsetLattice& lattice,
                                     std::span<const Rational> coefficients);
std::vector<Rational> bipolar_moebius_transform(const BipolarExtension& extension,
                                                std::span<const Rational> values);
std::vector<Rational> bipolar_zeta_transform(const BipolarExtension& extension,
                                             std::span<const Rational> coefficients);
std::vector<Rational> natural_extension_batch(const GeneralizedCapacity& capacity,
                                              std::span<const Profile> profiles);
std::vector<Rational> bipolar_natural_extension_batch(const BipolarCapacity& capacity,
                                                      std::span<const BipolarProfile> profiles);

}  // namespace reference
}  // namespace natinterp

#endif  // NATINTERP_KERNELS_HPP_
