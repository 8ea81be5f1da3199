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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "natinterp/bipolar.hpp"
#include "natinterp/error.hpp"
#include "natinterp/interpolation.hpp"
#include "natinterp/moebius.hpp"

namespace natinterp {
namespace {

void require_size(std::size_t expected, std::size_t actual) {
  if (expected != actual) {
    throw Error(ErrorCode::kInvalidInput, "expected " + std::to_string(expected) +
                                              " values, got " + std::to_string(actual));
  }
}

// Runs body(i) for i in [0, n) across threads. The first exception thrown by
// any iteration is rethrown once the loop has finished.
template <typename Body>
void parallel_for(std::size_t n, Body body) {
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(natinterp_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// Iterates over every submask of `mask`, including 0 and `mask` itself.
template <typename Visit>
void for_each_submask(std::uint64_t mask, Visit visit) {
  std::uint64_t s = mask;
  while (true) {
    visit(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}

int sign_of(std::uint64_t s) { return std::popcount(s) % 2 == 0 ? 1 : -1; }

}  // namespace

namespace kernels {

std::vector<Rational> moebius_transform(const DownsetLattice& lattice,
                                        std::span<const Rational> values) {
  require_size(lattice.size(), values.size());
  std::vector<Rational> out(lattice.size());
  const Poset& base = lattice.base();
  // µ(y, x) is nonzero only for y = x \ S with S an antichain of maximal
  // elements of x, so m(x) = Σ_S (-1)^{|S|} g(x \ S).
  parallel_for(lattice.size(), [&](std::size_t i) {
    Downset x = lattice.element(i);
    Rational sum = 0;
    for_each_submask(base.maximal_in(x).bits(), [&](std::uint64_t s) {
      const Rational& g = values[*lattice.find(x.minus(Downset(s)))];
      if (sign_of(s) > 0) {
        sum += g;
      } else {
        sum -= g;
      }
    });
    out[i] = std::move(sum);
  });
  return out;
}

std::vector<Rational> zeta_transform(const DownsetLattice& lattice,
                                     std::span<const Rational> coefficients) {
  require_size(lattice.size(), coefficients.size());
  std::vector<Rational> out(lattice.size());
  parallel_for(lattice.size(), [&](std::size_t i) {
    Downset x = lattice.element(i);
    Rational sum = 0;
    // Elements are sorted by size, so nothing past |x| can be below x.
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      Downset y = lattice.element(k);
      if (y.size() > x.size()) break;
      if (coefficients[k] != 0 && y.is_subset_of(x)) sum += coefficients[k];
    }
    out[i] = std::move(sum);
  });
  return out;
}

std::vector<Rational> bipolar_moebius_transform(const BipolarExtension& extension,
                                                std::span<const Rational> values) {
  require_size(extension.size(), values.size());
  std::vector<Rational> out(extension.size());
  const Poset& base = extension.base();
  parallel_for(extension.size(), [&](std::size_t i) {
    const BipolarElement& e = extension.element(i);
    std::uint64_t top_pos = base.maximal_in(e.pos).bits();
    std::uint64_t top_neg = base.maximal_in(e.neg).bits();
    Rational sum = 0;
    for_each_submask(top_pos, [&](std::uint64_t s) {
      for_each_submask(top_neg, [&](std::uint64_t t) {
        BipolarElement lower{e.pos.minus(Downset(s)), e.neg.minus(Downset(t))};
        const Rational& g = values[*extension.find(lower)];
        if (sign_of(s) * sign_of(t) > 0) {
          sum += g;
        } else {
          sum -= g;
        }
      });
    });
    out[i] = std::move(sum);
  });
  return out;
}

std::vector<Rational> bipolar_zeta_transform(const BipolarExtension& extension,
                                             std::span<const Rational> coefficients) {
  require_size(extension.size(), coefficients.size());
  std::vector<Rational> out(extension.size());
  parallel_for(extension.size(), [&](std::size_t i) {
    const BipolarElement& e = extension.element(i);
    Rational sum = 0;
    for (std::size_t k = 0; k < extension.size(); ++k) {
      if (coefficients[k] != 0 && bipolar_leq(extension.element(k), e)) sum += coefficients[k];
    }
    out[i] = std::move(sum);
  });
  return out;
}

std::vector<Rational> natural_extension_batch(const GeneralizedCapacity& capacity,
                                              std::span<const Profile> profiles) {
  std::vector<Rational> out(profiles.size());
  parallel_for(profiles.size(),
               [&](std::size_t i) { out[i] = natural_extension(capacity, profiles[i]); });
  return out;
}

std::vector<Rational> bipolar_natural_extension_batch(const BipolarCapacity& capacity,
                                                      std::span<const BipolarProfile> profiles) {
  std::vector<Rational> out(profiles.size());
  parallel_for(profiles.size(), [&](std::size_t i) {
    out[i] = bipolar_natural_extension(capacity, profiles[i]);
  });
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace kernels

namespace reference {

std::vector<Rational> moebius_transform(const DownsetLattice& lattice,
                                        std::span<const Rational> values) {
  require_size(lattice.size(), values.size());
  std::vector<Rational> out(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    Downset x = lattice.element(i);
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      Downset y = lattice.element(k);
      if (!y.is_subset_of(x)) continue;
      out[i] += lattice_moebius(lattice, y, x) * values[k];
    }
  }
  return out;
}

std::vector<Rational> zeta_transform(const DownsetLattice& lattice,
                                     std::span<const Rational> coefficients) {
  require_size(lattice.size(), coefficients.size());
  std::vector<Rational> out(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t k = 0; k < lattice.size(); ++k) {
      if (lattice.element(k).is_subset_of(lattice.element(i))) out[i] += coefficients[k];
    }
  }
  return out;
}

std::vector<Rational> bipolar_moebius_transform(const BipolarExtension& extension,
                                                std::span<const Rational> values) {
  require_size(extension.size(), values.size());
  std::vector<Rational> out(extension.size());
  const DownsetLattice& lattice = extension.lattice();
  for (std::size_t i = 0; i < extension.size(); ++i) {
    const BipolarElement& upper = extension.element(i);
    for (std::size_t k = 0; k < extension.size(); ++k) {
      const BipolarElement& lower = extension.element(k);
      if (!bipolar_leq(lower, upper)) continue;
      out[i] += bipolar_moebius_function(lattice, lower, upper) * values[k];
    }
  }
  return out;
}

std::vector<Rational> bipolar_zeta_transform(const BipolarExtension& extension,
                                             std::span<const Rational> coefficients) {
  require_size(extension.size(), coefficients.size());
  std::vector<Rational> out(extension.size());
  for (std::size_t i = 0; i < extension.size(); ++i) {
    for (std::size_t k = 0; k < extension.size(); ++k) {
      if (bipolar_leq(extension.element(k), extension.element(i))) out[i] += coefficients[k];
    }
  }
  return out;
}

std::vector<Rational> natural_extension_batch(const GeneralizedCapacity& capacity,
                                              std::span<const Profile> profiles) {
  std::vector<Rational> out;
  out.reserve(profiles.size());
  for (const Profile& f : profiles) out.push_back(natural_extension(capacity, f));
  return out;
}

std::vector<Rational> bipolar_natural_extension_batch(const BipolarCapacity& capacity,
                                                      std::span<const BipolarProfile> profiles) {
  std::vector<Rational> out;
  out.reserve(profiles.size());
  for (const BipolarProfile& f : profiles) out.push_back(bipolar_natural_extension(capacity, f));
  return out;
}

}  // namespace reference
}  // namespace natinterp
