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

#include "natinterp/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "natinterp/error.hpp"

namespace natinterp::io {
namespace {

[[noreturn]] void parse_fail(const std::string& message, const std::string& field) {
  throw Error(ErrorCode::kParseError, message, field);
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) parse_fail("expected a JSON object", key);
  auto it = doc.find(key);
  if (it == doc.end()) parse_fail(std::string("missing field \"") + key + "\"", key);
  return *it;
}

const Json& array_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_array()) parse_fail(std::string("\"") + key + "\" must be an array", key);
  return v;
}

std::string string_of(const Json& v, const std::string& where) {
  if (!v.is_string()) parse_fail("expected a string", where);
  return v.get<std::string>();
}

int int_of(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail("expected an integer", where);
  return v.get<int>();
}

// Runs `body`, prefixing the context of any Error it throws with `where`.
template <typename Body>
auto in_field(const std::string& where, Body body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    throw e.with_context(where);
  }
}

std::string entry_name(const char* key, std::size_t i) {
  return std::string(key) + "[" + std::to_string(i) + "]";
}

LatticeFile lattice_reference(const Json& doc, const std::filesystem::path& base_dir) {
  const Json& source = field(doc, "lattice");
  if (source.is_string()) {
    std::filesystem::path path = source.get<std::string>();
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    Json inner = read_json_file(path);
    return in_field(path.string(), [&] { return parse_lattice(inner); });
  }
  return in_field("lattice", [&] { return parse_lattice(source); });
}

KaryNode parse_node(const Json& v, const std::string& where) {
  if (!v.is_array()) parse_fail("a node is an array of levels", where);
  KaryNode node;
  for (const Json& l : v) node.push_back(int_of(l, where));
  return node;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open file", path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what(), path.string());
  }
}

Rational parse_value(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) {
    return parse_rational(value.dump());
  }
  if (value.is_number_float()) return rational_from_double(value.get<double>());
  throw Error(ErrorCode::kParseError, "expected a number or a rational string");
}

Json value_to_json(const Rational& value) { return to_string(value); }

Poset parse_poset(const Json& doc) {
  std::vector<std::string> elements;
  const Json& list = array_field(doc, "elements");
  for (std::size_t i = 0; i < list.size(); ++i) {
    elements.push_back(string_of(list[i], entry_name("elements", i)));
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    const Json& pairs = array_field(doc, "covers");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const Json& p = pairs[i];
      std::string where = entry_name("covers", i);
      if (!p.is_array() || p.size() != 2) parse_fail("a cover is [lower, upper]", where);
      covers.emplace_back(string_of(p[0], where), string_of(p[1], where));
    }
  }
  return validate_poset(std::move(elements), covers);
}

Json poset_to_json(const Poset& poset) {
  Json doc;
  doc["elements"] = poset.labels();
  Json covers = Json::array();
  for (auto [lo, up] : poset.covers()) covers.push_back({poset.label(lo), poset.label(up)});
  doc["covers"] = std::move(covers);
  return doc;
}

LatticeFile parse_lattice(const Json& doc) {
  std::string role = "join_irreducibles";
  if (doc.is_object() && doc.contains("role")) role = string_of(doc["role"], "role");
  auto poset = std::make_shared<const Poset>(parse_poset(doc));
  LatticeFile out;
  if (role == "join_irreducibles") {
    out.lattice = std::make_shared<const DownsetLattice>(poset);
  } else if (role == "explicit_lattice") {
    VerifiedLattice v = verify_distributive(*poset);
    out.lattice = std::move(v.lattice);
    out.dictionary = std::move(v.dictionary);
    out.explicit_form = true;
  } else {
    parse_fail("role must be \"join_irreducibles\" or \"explicit_lattice\"", "role");
  }
  return out;
}

Json lattice_to_json(const DownsetLattice& lattice) {
  Json doc;
  doc["role"] = "join_irreducibles";
  Json poset = poset_to_json(lattice.base());
  doc["elements"] = poset["elements"];
  doc["covers"] = poset["covers"];
  return doc;
}

Downset parse_label_set(const Json& labels, const Poset& base) {
  if (!labels.is_array()) parse_fail("expected an array of labels", "");
  Downset out;
  for (const Json& l : labels) out |= Downset::singleton(base.index_of(string_of(l, "")));
  return out;
}

Json label_set_to_json(const Poset& base, Downset x) { return base.labels_of(x); }

GeneralizedCapacity parse_capacity(const Json& doc, const std::filesystem::path& base_dir) {
  LatticeFile file = lattice_reference(doc, base_dir);
  const DownsetLattice& lattice = *file.lattice;
  std::unordered_map<std::string, Downset> by_name(file.dictionary.begin(),
                                                   file.dictionary.end());
  std::vector<std::optional<Rational>> seen(lattice.size());
  const Json& values = array_field(doc, "values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    in_field(entry_name("values", i), [&] {
      const Json& entry = values[i];
      Downset x;
      if (entry.contains("downset")) {
        x = parse_label_set(entry["downset"], lattice.base());
      } else if (entry.contains("element")) {
        std::string name = string_of(entry["element"], "element");
        auto it = by_name.find(name);
        if (it == by_name.end()) {
          throw Error(ErrorCode::kUnknownLabel, "unknown lattice element \"" + name + "\"");
        }
        x = it->second;
      } else {
        parse_fail("entry needs \"downset\" or \"element\"", "");
      }
      std::size_t k = lattice.index_of(x);
      Rational v = parse_value(field(entry, "value"));
      if (seen[k] && *seen[k] != v) {
        throw Error(ErrorCode::kConflictingValues,
                    lattice.element_label(x) + " is given two different values");
      }
      seen[k] = std::move(v);
    });
  }
  std::vector<Rational> out;
  out.reserve(lattice.size());
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (!seen[k]) {
      throw Error(ErrorCode::kMissingValue,
                  "no value for " + lattice.element_label(lattice.element(k)), "values");
    }
    out.push_back(std::move(*seen[k]));
  }
  return GeneralizedCapacity(file.lattice, std::move(out));
}

Json capacity_to_json(const GeneralizedCapacity& capacity) {
  const DownsetLattice& lattice = capacity.lattice();
  Json doc;
  doc["lattice"] = lattice_to_json(lattice);
  Json values = Json::array();
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    values.push_back({{"downset", label_set_to_json(lattice.base(), lattice.element(k))},
                      {"value", value_to_json(capacity[k])}});
  }
  doc["values"] = std::move(values);
  return doc;
}

BipolarCapacity parse_bipolar_capacity(const Json& doc, const std::filesystem::path& base_dir) {
  LatticeFile file = lattice_reference(doc, base_dir);
  const Poset& base = file.lattice->base();
  std::vector<std::pair<BipolarElement, Rational>> entries;
  const Json& values = array_field(doc, "values");
  for (std::size_t i = 0; i < values.size(); ++i) {
    in_field(entry_name("values", i), [&] {
      const Json& entry = values[i];
      BipolarElement e{parse_label_set(field(entry, "pos"), base),
                       parse_label_set(field(entry, "neg"), base)};
      entries.emplace_back(e, parse_value(field(entry, "value")));
    });
  }
  return in_field("values", [&] { return BipolarCapacity(file.lattice, std::move(entries)); });
}

Json bipolar_capacity_to_json(const BipolarCapacity& capacity) {
  const Poset& base = capacity.base();
  Json doc;
  doc["lattice"] = lattice_to_json(capacity.lattice());
  Json values = Json::array();
  for (std::size_t k = 0; k < capacity.domain().size(); ++k) {
    const BipolarElement& e = capacity.domain()[k];
    values.push_back({{"pos", label_set_to_json(base, e.pos)},
                      {"neg", label_set_to_json(base, e.neg)},
                      {"value", value_to_json(capacity.values()[k])}});
  }
  doc["values"] = std::move(values);
  return doc;
}

KaryCapacityFile parse_kary_capacity(const Json& doc) {
  int k = int_of(field(doc, "k"), "k");
  int n = int_of(field(doc, "n"), "n");
  bool bipolar = false;
  if (doc.contains("bipolar")) {
    if (!doc["bipolar"].is_boolean()) parse_fail("\"bipolar\" must be a boolean", "bipolar");
    bipolar = doc["bipolar"].get<bool>();
  }
  KaryCapacityFile out;
  auto lattice = std::make_shared<const KaryLattice>(k, n);
  out.lattice = lattice;
  const Json& values = array_field(doc, "values");
  if (bipolar) {
    std::vector<std::pair<BipolarElement, Rational>> entries;
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::string where = entry_name("values", i);
      in_field(where, [&] {
        const Json& entry = values[i];
        BipolarElement e = lattice->bipolar_of(parse_node(field(entry, "pos"), where),
                                               parse_node(field(entry, "neg"), where));
        entries.emplace_back(e, parse_value(field(entry, "value")));
      });
    }
    out.bipolar.emplace(
        in_field("values", [&] { return BipolarCapacity(lattice->lattice_ptr(), entries); }));
  } else {
    const DownsetLattice& l = lattice->lattice();
    std::vector<std::optional<Rational>> seen(l.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::string where = entry_name("values", i);
      in_field(where, [&] {
        const Json& entry = values[i];
        KaryNode node = parse_node(field(entry, "node"), where);
        std::size_t idx = l.index_of(lattice->downset_of(node));
        Rational v = parse_value(field(entry, "value"));
        if (seen[idx] && *seen[idx] != v) {
          throw Error(ErrorCode::kConflictingValues,
                      node_label(node) + " is given two different values");
        }
        seen[idx] = std::move(v);
      });
    }
    std::vector<Rational> vals;
    for (std::size_t idx = 0; idx < l.size(); ++idx) {
      if (!seen[idx]) {
        throw Error(ErrorCode::kMissingValue,
                    "no value for node " + node_label(lattice->node_of(l.element(idx))),
                    "values");
      }
      vals.push_back(std::move(*seen[idx]));
    }
    out.unipolar.emplace(lattice->lattice_ptr(), std::move(vals));
  }
  return out;
}

Json kary_capacity_to_json(const KaryLattice& lattice, const GeneralizedCapacity& capacity) {
  Json doc;
  doc["k"] = lattice.k();
  doc["n"] = lattice.n();
  Json values = Json::array();
  const DownsetLattice& l = capacity.lattice();
  for (std::size_t i = 0; i < l.size(); ++i) {
    values.push_back(
        {{"node", lattice.node_of(l.element(i))}, {"value", value_to_json(capacity[i])}});
  }
  doc["values"] = std::move(values);
  return doc;
}

Json kary_capacity_to_json(const KaryLattice& lattice, const BipolarCapacity& capacity) {
  Json doc;
  doc["k"] = lattice.k();
  doc["n"] = lattice.n();
  doc["bipolar"] = true;
  Json values = Json::array();
  for (std::size_t i = 0; i < capacity.domain().size(); ++i) {
    const BipolarElement& e = capacity.domain()[i];
    values.push_back({{"pos", lattice.node_of(e.pos)},
                      {"neg", lattice.node_of(e.neg)},
                      {"value", value_to_json(capacity.values()[i])}});
  }
  doc["values"] = std::move(values);
  return doc;
}

std::vector<Rational> parse_profile_values(const Json& doc, const Poset& base) {
  const Json& values = field(doc, "values");
  if (!values.is_object()) parse_fail("\"values\" must map labels to numbers", "values");
  std::vector<std::optional<Rational>> seen(base.size());
  for (auto it = values.begin(); it != values.end(); ++it) {
    in_field("values." + it.key(), [&] {
      seen[base.index_of(it.key())] = parse_value(it.value());
    });
  }
  std::vector<Rational> out;
  out.reserve(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (!seen[j]) {
      throw Error(ErrorCode::kMissingValue, "no value for \"" + base.label(j) + "\"", "values");
    }
    out.push_back(std::move(*seen[j]));
  }
  return out;
}

Json profile_to_json(const Poset& base, const std::vector<Rational>& values) {
  Json map = Json::object();
  for (std::size_t j = 0; j < base.size(); ++j) map[base.label(j)] = value_to_json(values[j]);
  return Json{{"values", std::move(map)}};
}

std::vector<Rational> parse_scale_levels(const Json& doc) {
  const Json& levels = array_field(doc, "levels");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    out.push_back(in_field(entry_name("levels", i), [&] { return parse_value(levels[i]); }));
  }
  return out;
}

Json scale_to_json(const ReferenceScale& scale) {
  Json levels = Json::array();
  for (const Rational& r : scale.levels()) levels.push_back(value_to_json(r));
  return Json{{"levels", std::move(levels)}};
}

}  // namespace natinterp::io
