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

// JSON file formats. Values are written as exact rational strings ("3/10");
// on input, strings are parsed exactly and JSON numbers go through their
// shortest decimal form, so 0.1 means 1/10.
//
//   poset     {"elements": [...], "covers": [[lower, upper], ...]}
//   lattice   a poset plus "role": "join_irreducibles" | "explicit_lattice"
//   capacity  {"lattice": <lattice or path>, "values": [{"downset": [...] or
//              "element": label, "value": v}, ...]}
//   bipolar   {"lattice": ..., "values": [{"pos": [...], "neg": [...], "value": v}]}
//   k-ary     {"k": 3, "n": 2, "values": [{"node": [1,0], "value": v}]}, or with
//              "bipolar": true and {"pos": [1,0], "neg": [0,2], "value": v}
//   profile   {"values": {"label": v, ...}}
//   scale     {"levels": [0, 0.5, 1]}

#ifndef NATINTERP_IO_HPP_
#define NATINTERP_IO_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "natinterp/bipolar.hpp"
#include "natinterp/birkhoff.hpp"
#include "natinterp/kary.hpp"
#include "natinterp/moebius.hpp"
#include "natinterp/poset.hpp"
#include "natinterp/rational.hpp"

namespace natinterp::io {

using Json = nlohmann::ordered_json;

// Throws ParseError (with the path as context) on unreadable or malformed files.
Json read_json_file(const std::filesystem::path& path);

// A JSON string ("3/10", "-0.25") or number. Throws ParseError.
Rational parse_value(const Json& value);
Json value_to_json(const Rational& value);

Poset parse_poset(const Json& doc);
Json poset_to_json(const Poset& poset);

struct LatticeFile {
  std::shared_ptr<const DownsetLattice> lattice;
  // Present when the file gave the lattice explicitly: element label -> η.
  std::vector<std::pair<std::string, Downset>> dictionary;
  bool explicit_form = false;
};

// A missing "role" means join_irreducibles.
LatticeFile parse_lattice(const Json& doc);
// Always written in Birkhoff form.
Json lattice_to_json(const DownsetLattice& lattice);

// `base_dir` resolves a "lattice" given as a relative path.
GeneralizedCapacity parse_capacity(const Json& doc, const std::filesystem::path& base_dir = {});
Json capacity_to_json(const GeneralizedCapacity& capacity);

BipolarCapacity parse_bipolar_capacity(const Json& doc,
                                       const std::filesystem::path& base_dir = {});
Json bipolar_capacity_to_json(const BipolarCapacity& capacity);

struct KaryCapacityFile {
  std::shared_ptr<const KaryLattice> lattice;
  std::optional<GeneralizedCapacity> unipolar;
  std::optional<BipolarCapacity> bipolar;
};

KaryCapacityFile parse_kary_capacity(const Json& doc);
Json kary_capacity_to_json(const KaryLattice& lattice, const GeneralizedCapacity& capacity);
Json kary_capacity_to_json(const KaryLattice& lattice, const BipolarCapacity& capacity);

// Values keyed by label, covering the base exactly. Throws UnknownLabel,
// MissingValue.
std::vector<Rational> parse_profile_values(const Json& doc, const Poset& base);
Json profile_to_json(const Poset& base, const std::vector<Rational>& values);

std::vector<Rational> parse_scale_levels(const Json& doc);
Json scale_to_json(const ReferenceScale& scale);

// Downset given as a label list. Throws UnknownLabel.
Downset parse_label_set(const Json& labels, const Poset& base);
Json label_set_to_json(const Poset& base, Downset x);

}  // namespace natinterp::io

#endif  // NATINTERP_IO_HPP_
