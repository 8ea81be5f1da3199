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


#include "natinterp/kernels.hpp"

#include <gtest/gtest.h>

#include "support/support.hpp"

namespace natinterp {
namespace {

TEST(KernelsTest, TransformsMatchReference) {
  testing::Rng rng(211);
  for (int round = 0; round < 12; ++round) {
    auto lattice = testing::lattice_of(round % 3 == 0 ? build_kary_base(3 + round % 2, 3)
                                                      : testing::random_poset(rng, 4 + round % 5));
    GeneralizedCapacity g = testing::random_capacity(rng, lattice, false);
    auto m = kernels::moebius_transform(*lattice, g.values());
    EXPECT_EQ(m, reference::moebius_transform(*lattice, g.values()));
    EXPECT_EQ(kernels::zeta_transform(*lattice, m), reference::zeta_transform(*lattice, m));
    EXPECT_EQ(kernels::zeta_transform(*lattice, m), g.values());
  }
}

TEST(KernelsTest, BipolarTransformsMatchReference) {
  testing::Rng rng(223);
  for (int round = 0; round < 8; ++round) {
    auto lattice = testing::lattice_of(round % 2 == 0 ? testing::antichain(3 + round % 3)
                                                      : testing::random_poset(rng, 5));
    BipolarExtension ext(lattice);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < ext.size(); ++i) {
      values.push_back(testing::random_rational(rng, -2, 2, 11));
    }
    auto m = kernels::bipolar_moebius_transform(ext, values);
    EXPECT_EQ(m, reference::bipolar_moebius_transform(ext, values));
    EXPECT_EQ(kernels::bipolar_zeta_transform(ext, m), values);
    EXPECT_EQ(reference::bipolar_zeta_transform(ext, m), values);
  }
}

TEST(KernelsTest, BatchesMatchReference) {
  testing::Rng rng(227);
  KaryLattice kl(3, 4);
  GeneralizedCapacity g = testing::random_capacity(rng, kl.lattice_ptr());
  BipolarCapacity v = testing::random_bipolar_capacity(rng, kl.lattice_ptr());
  std::vector<Profile> profiles;
  std::vector<BipolarProfile> bipolar_profiles;
  for (int i = 0; i < 200; ++i) {
    profiles.push_back(testing::random_profile(rng, kl.base_ptr(), 30, i % 2 == 0));
    bipolar_profiles.push_back(testing::random_bipolar_profile(rng, kl.base_ptr(), 30));
  }
  EXPECT_EQ(kernels::natural_extension_batch(g, profiles),
            reference::natural_extension_batch(g, profiles));
  EXPECT_EQ(kernels::bipolar_natural_extension_batch(v, bipolar_profiles),
            reference::bipolar_natural_extension_batch(v, bipolar_profiles));
  EXPECT_GE(kernels::max_threads(), 1);
}

TEST(KernelsTest, EmptyBatch) {
  auto lattice = testing::lattice_of(testing::antichain(2));
  GeneralizedCapacity g(lattice, {0, 1, 1, 1});
  std::vector<Profile> none;
  EXPECT_TRUE(kernels::natural_extension_batch(g, none).empty());
}

}  // namespace
}  // namespace natinterp
