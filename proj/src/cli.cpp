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

#include "natinterp/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "natinterp/bipolar.hpp"
#include "natinterp/bipolar_extension.hpp"
#include "natinterp/birkhoff.hpp"
#include "natinterp/error.hpp"
#include "natinterp/interpolation.hpp"
#include "natinterp/io.hpp"
#include "natinterp/kary.hpp"
#include "natinterp/moebius.hpp"

namespace natinterp::cli {
namespace {

using io::Json;
namespace fs = std::filesystem;

struct Options {
  std::string file;
  std::string capacity;
  std::string profile;
  std::string scale;
  std::string point;
  bool decomposition = false;
  bool dot = false;
  bool bipolar = false;
};

// Result of a command: the JSON document (or raw text) and whether every
// cross-check agreed.
struct Outcome {
  Json doc;
  std::string text;
  bool consistent = true;
};

Json rational_json(const Rational& r) { return io::value_to_json(r); }

Json decimal_json(const Rational& r) { return to_double(r); }

Json load(const std::string& path) { return io::read_json_file(path); }

template <typename Body>
auto from_file(const std::string& path, Body body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error& e) {
    throw e.with_context(path);
  }
}

fs::path dir_of(const std::string& path) { return fs::path(path).parent_path(); }

Json labels_json(const Poset& base, const std::vector<Poset::Index>& indices) {
  Json out = Json::array();
  for (auto i : indices) out.push_back(base.label(i));
  return out;
}

Json chain_json(const Poset& base, const ChainDecomposition& d) {
  Json chain = Json::array();
  for (Downset x : d.chain) chain.push_back(io::label_set_to_json(base, x));
  Json weights = Json::array();
  Json approx = Json::array();
  for (const Rational& a : d.weights) {
    weights.push_back(rational_json(a));
    approx.push_back(decimal_json(a));
  }
  return Json{{"permutation", labels_json(base, d.permutation)},
              {"chain", std::move(chain)},
              {"weights", std::move(weights)},
              {"weights_decimal", std::move(approx)}};
}

Json node_chain_json(const KaryLattice& lattice, const ChainDecomposition& d) {
  Json nodes = Json::array();
  for (Downset x : d.chain) nodes.push_back(node_label(lattice.node_of(x)));
  return nodes;
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorCode::kParseError, "empty point", "--point");
  return out;
}

// A poset document: either a bare poset/lattice file, or the base of an
// explicitly given lattice.
std::shared_ptr<const Poset> load_base(const std::string& path) {
  Json doc = load(path);
  return from_file(path, [&] {
    io::LatticeFile file = io::parse_lattice(doc);
    return file.lattice->base_ptr();
  });
}

Outcome poset_check(const Options& o) {
  Json doc = load(o.file);
  Poset p = from_file(o.file, [&] { return io::parse_poset(doc); });
  Outcome out;
  if (o.dot) {
    out.text = to_dot(p);
    return out;
  }
  Json components = Json::array();
  for (const Component& c : connected_components(p)) {
    components.push_back({{"members", labels_json(p, c.members)},
                          {"minimal", labels_json(p, c.minimal)}});
  }
  out.doc = {{"valid", true},
             {"elements", p.size()},
             {"covers", p.covers().size()},
             {"downsets", from_file(o.file, [&] { return count_downsets(p); })},
             {"linear_extension", labels_json(p, p.linear_extension())},
             {"components", std::move(components)}};
  return out;
}

Outcome lattice_verify(const Options& o) {
  Json doc = load(o.file);
  io::LatticeFile file = from_file(o.file, [&] { return io::parse_lattice(doc); });
  const DownsetLattice& lattice = *file.lattice;
  Outcome out;
  if (o.dot) {
    out.text = to_dot(lattice.as_explicit_poset(), "lattice");
    return out;
  }
  Json complemented = Json::array();
  for (const ComplementPair& c : complemented_elements(lattice)) {
    complemented.push_back({{"element", io::label_set_to_json(lattice.base(), c.element)},
                            {"complement", io::label_set_to_json(lattice.base(), c.complement)}});
  }
  out.doc = {{"distributive", true},
             {"size", lattice.size()},
             {"join_irreducibles", io::poset_to_json(lattice.base())},
             {"complemented", std::move(complemented)}};
  if (file.explicit_form) {
    Json dictionary = Json::object();
    for (const auto& [name, x] : file.dictionary) {
      dictionary[name] = io::label_set_to_json(lattice.base(), x);
    }
    out.doc["eta"] = std::move(dictionary);
  }
  return out;
}

Outcome mosaic_check(const Options& o) {
  auto base = load_base(o.file);
  Outcome out;
  out.doc = {{"regular_mosaic", is_regular_mosaic(*base)}};
  for (const Component& c : connected_components(*base)) {
    if (c.minimal.size() > 1) {
      out.doc["witness_component_bottoms"] = labels_json(*base, c.minimal);
      break;
    }
  }
  return out;
}

Outcome bipolar_enumerate(const Options& o) {
  Json doc = load(o.file);
  io::LatticeFile file = from_file(o.file, [&] { return io::parse_lattice(doc); });
  auto ext = std::make_shared<const BipolarExtension>(file.lattice);
  Outcome out;
  if (o.dot) {
    out.text = to_dot(ext->as_poset(), "bipolar_extension");
    return out;
  }
  const Poset& base = file.lattice->base();
  std::vector<BipolarElement> tiles = tile_union(*file.lattice);
  Json elements = Json::array();
  Json outside = Json::array();
  for (const BipolarElement& e : ext->elements()) {
    Json item{{"pos", io::label_set_to_json(base, e.pos)},
              {"neg", io::label_set_to_json(base, e.neg)}};
    if (!std::binary_search(tiles.begin(), tiles.end(), e)) outside.push_back(item);
    elements.push_back(std::move(item));
  }
  out.doc = {{"size", ext->size()},
             {"tile_union_size", tiles.size()},
             {"regular_mosaic", is_regular_mosaic(base)},
             {"elements", std::move(elements)},
             {"outside_tiles", std::move(outside)}};
  return out;
}

Outcome mobius(const Options& o) {
  Json doc = load(o.capacity);
  Outcome out;
  if (o.bipolar) {
    BipolarCapacity cap =
        from_file(o.capacity, [&] { return io::parse_bipolar_capacity(doc, dir_of(o.capacity)); });
    auto ext = std::make_shared<const BipolarExtension>(cap.lattice_ptr());
    BipolarFunction f = from_file(o.capacity, [&] { return cap.to_function(ext); });
    BipolarMoebiusVector m = bipolar_moebius_transform(f);
    bool agrees = bipolar_zeta_transform(m).values() == f.values();
    const Poset& base = cap.base();
    Json coefficients = Json::array();
    for (std::size_t i = 0; i < ext->size(); ++i) {
      coefficients.push_back({{"pos", io::label_set_to_json(base, ext->element(i).pos)},
                              {"neg", io::label_set_to_json(base, ext->element(i).neg)},
                              {"value", rational_json(m[i])}});
    }
    out.doc = {{"coefficients", std::move(coefficients)}, {"agrees", agrees}};
    out.consistent = agrees;
    return out;
  }
  GeneralizedCapacity cap =
      from_file(o.capacity, [&] { return io::parse_capacity(doc, dir_of(o.capacity)); });
  MoebiusVector m = moebius_transform(cap);
  bool agrees = zeta_transform(m).values() == cap.values();
  const DownsetLattice& lattice = cap.lattice();
  Json coefficients = Json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    coefficients.push_back({{"downset", io::label_set_to_json(lattice.base(), lattice.element(i))},
                            {"value", rational_json(m[i])}});
  }
  out.doc = {{"coefficients", std::move(coefficients)},
             {"monotone", cap.is_monotone()},
             {"game", cap.is_game()},
             {"agrees", agrees}};
  out.consistent = agrees;
  return out;
}

Outcome kary_eval(const Options& o, const Json& capacity_doc) {
  io::KaryCapacityFile file =
      from_file(o.capacity, [&] { return io::parse_kary_capacity(capacity_doc); });
  const KaryLattice& lattice = *file.lattice;
  Json profile_doc = load(o.profile);
  std::vector<Rational> values =
      from_file(o.profile, [&] { return io::parse_profile_values(profile_doc, lattice.base()); });
  Outcome out;
  KaryEvaluation e;
  Rational dual;
  if (file.bipolar) {
    BipolarProfile f = from_file(o.profile, [&] {
      return BipolarProfile(lattice.base_ptr(), std::move(values));
    });
    e = bipolar_kary_choquet(lattice, *file.bipolar, f);
    auto ext = std::make_shared<const BipolarExtension>(lattice.lattice_ptr());
    dual = bipolar_moebius_form_eval(bipolar_moebius_transform(file.bipolar->to_function(ext)), f);
  } else {
    Profile f = from_file(o.profile, [&] { return Profile(lattice.base_ptr(), std::move(values)); });
    e = kary_choquet(lattice, *file.unipolar, f);
    dual = moebius_form_eval(moebius_transform(*file.unipolar), f);
  }
  out.consistent = dual == e.value;
  out.doc = {{"value", rational_json(e.value)},
             {"value_decimal", decimal_json(e.value)},
             {"agrees", out.consistent}};
  if (file.bipolar) {
    Json tile = Json::array();
    for (int i : e.tile) tile.push_back(i + 1);
    out.doc["tile"] = std::move(tile);
  }
  if (o.decomposition) {
    Json d = chain_json(lattice.base(), e.decomposition);
    d["nodes"] = node_chain_json(lattice, e.decomposition);
    Json lambda = Json::array();
    Json theta = Json::array();
    for (std::size_t i = 0; i < e.lambda.size(); ++i) {
      lambda.push_back(e.lambda[i]);
      theta.push_back(e.theta[i] + 1);
    }
    d["lambda"] = std::move(lambda);
    d["theta"] = std::move(theta);
    if (file.bipolar) {
      Json vertices = Json::array();
      Downset x = lattice.complemented(e.tile);
      Tile t(lattice.lattice(), x);
      for (Downset c : e.decomposition.chain) {
        BipolarElement v = t.phi_inverse(c);
        vertices.push_back({{"pos", node_label(lattice.node_of(v.pos))},
                            {"neg", node_label(lattice.node_of(v.neg))}});
      }
      d["vertices"] = std::move(vertices);
    }
    out.doc["decomposition"] = std::move(d);
  }
  return out;
}

Outcome choquet_eval(const Options& o) {
  Json doc = load(o.capacity);
  if (doc.is_object() && doc.contains("k")) {
    if (doc.contains("bipolar") && doc["bipolar"] == true) {
      throw Error(ErrorCode::kInvalidInput, "use `bipolar eval` or `kary eval` for bicapacities",
                  o.capacity);
    }
    return kary_eval(o, doc);
  }
  GeneralizedCapacity cap =
      from_file(o.capacity, [&] { return io::parse_capacity(doc, dir_of(o.capacity)); });
  Json profile_doc = load(o.profile);
  Profile f = from_file(o.profile, [&] {
    return Profile(cap.lattice().base_ptr(),
                   io::parse_profile_values(profile_doc, cap.lattice().base()));
  });
  ChainDecomposition d = triangulate(f);
  Rational value = evaluate_on_chain(cap, d);
  Rational dual = moebius_form_eval(moebius_transform(cap), f);
  Outcome out;
  out.consistent = value == dual;
  out.doc = {{"value", rational_json(value)},
             {"value_decimal", decimal_json(value)},
             {"agrees", out.consistent}};
  if (o.decomposition) out.doc["decomposition"] = chain_json(f.base(), d);
  return out;
}

Outcome bipolar_eval(const Options& o) {
  Json doc = load(o.capacity);
  if (doc.is_object() && doc.contains("k")) return kary_eval(o, doc);
  BipolarCapacity cap =
      from_file(o.capacity, [&] { return io::parse_bipolar_capacity(doc, dir_of(o.capacity)); });
  Json profile_doc = load(o.profile);
  BipolarProfile f = from_file(o.profile, [&] {
    return BipolarProfile(cap.lattice().base_ptr(),
                          io::parse_profile_values(profile_doc, cap.base()));
  });
  BipolarEvaluation e = bipolar_natural_extension_detailed(cap, f);
  auto ext = std::make_shared<const BipolarExtension>(cap.lattice_ptr());
  Rational dual = bipolar_moebius_form_eval(bipolar_moebius_transform(cap.to_function(ext)), f);
  Outcome out;
  out.consistent = dual == e.value;
  out.doc = {{"value", rational_json(e.value)},
             {"value_decimal", decimal_json(e.value)},
             {"tile", io::label_set_to_json(cap.base(), e.tile)},
             {"agrees", out.consistent}};
  if (o.decomposition) {
    Json d = chain_json(cap.base(), e.decomposition);
    Json vertices = Json::array();
    for (const BipolarElement& v : e.vertices) {
      vertices.push_back({{"pos", io::label_set_to_json(cap.base(), v.pos)},
                          {"neg", io::label_set_to_json(cap.base(), v.neg)}});
    }
    d["vertices"] = std::move(vertices);
    out.doc["decomposition"] = std::move(d);
  }
  return out;
}

Json indexing_json(const LevelIndexing& idx) {
  Json level = Json::array();
  Json z = Json::array();
  Json a = Json::array();
  for (std::size_t i = 0; i < idx.level.size(); ++i) {
    level.push_back(idx.level[i]);
    z.push_back(rational_json(idx.z[i]));
    if (idx.positive[i]) a.push_back(i + 1);
  }
  return Json{{"I", std::move(level)}, {"z", std::move(z)}, {"A", std::move(a)}, {"q", idx.q}};
}

Outcome levels_eval(const Options& o) {
  Json scale_doc = load(o.scale);
  std::vector<Rational> levels =
      from_file(o.scale, [&] { return io::parse_scale_levels(scale_doc); });
  ReferenceScale scale = from_file(o.scale, [&] {
    return o.bipolar ? ReferenceScale::symmetric(std::move(levels))
                     : ReferenceScale::unipolar(std::move(levels));
  });
  Json cap_doc = load(o.capacity);
  io::KaryCapacityFile file =
      from_file(o.capacity, [&] { return io::parse_kary_capacity(cap_doc); });
  const KaryLattice& lattice = *file.lattice;
  std::vector<Rational> x = parse_point(o.point);
  Outcome out;
  if (o.bipolar) {
    if (!file.bipolar) {
      throw Error(ErrorCode::kInvalidInput, "--bipolar needs a bipolar k-ary capacity", o.capacity);
    }
    Rational e3 = e3_eval(lattice, *file.bipolar, x, scale);
    auto [idx, f] = bipolar_level_profile(lattice, x, scale);
    KaryEvaluation k = bipolar_kary_choquet(lattice, *file.bipolar, f);
    out.consistent = e3 == k.value;
    out.doc = {{"value", rational_json(e3)},
               {"value_decimal", decimal_json(e3)},
               {"choquet", rational_json(k.value)},
               {"agrees", out.consistent},
               {"indexing", indexing_json(idx)}};
    return out;
  }
  if (!file.unipolar) {
    throw Error(ErrorCode::kInvalidInput, "a unipolar k-ary capacity is required", o.capacity);
  }
  Rational e1 = e1_eval(lattice, *file.unipolar, x, scale);
  auto [idx, f] = level_profile(lattice, x, scale);
  Rational e2 = e2_eval(lattice, *file.unipolar, f);
  out.consistent = e1 == e2;
  out.doc = {{"value", rational_json(e1)},
             {"value_decimal", decimal_json(e1)},
             {"staircase_value", rational_json(e2)},
             {"agrees", out.consistent},
             {"indexing", indexing_json(idx)}};
  return out;
}

// Golden instances compiled into the binary.
struct Check {
  std::string name;
  std::function<bool()> run;
};

std::vector<Check> selftest_checks() {
  auto rat = [](const char* s) { return parse_rational(s); };
  std::vector<Check> checks;

  checks.push_back({"unipolar 3x2 chain and weights", [rat] {
    KaryLattice l(3, 2);
    Profile f(l.base_ptr(), {rat("0.5"), rat("0.1"), rat("0.3"), rat("0.2")});
    ChainDecomposition d = triangulate(f);
    std::vector<KaryNode> nodes;
    for (Downset x : d.chain) nodes.push_back(l.node_of(x));
    std::vector<KaryNode> want = {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}};
    std::vector<Rational> weights = {rat("1/2"), rat("1/5"), rat("1/10"), rat("1/10"),
                                     rat("1/10")};
    return nodes == want && d.weights == weights;
  }});

  checks.push_back({"bipolar 3x2 tile and vertices", [rat] {
    KaryLattice l(3, 2);
    BipolarProfile f(l.base_ptr(), {rat("0.5"), rat("0.1"), rat("-0.3"), rat("-0.2")});
    Downset x = select_tile(f);
    if (l.node_of(x) != KaryNode{2, 0}) return false;
    Tile t(l.lattice(), x);
    ChainDecomposition d = triangulate(f.magnitude());
    std::vector<std::pair<KaryNode, KaryNode>> got;
    for (std::size_t i = 1; i < d.chain.size(); ++i) {
      BipolarElement v = t.phi_inverse(d.chain[i]);
      got.emplace_back(l.node_of(v.pos), l.node_of(v.neg));
    }
    std::vector<std::pair<KaryNode, KaryNode>> want = {
        {{1, 0}, {0, 0}}, {{1, 0}, {0, 1}}, {{1, 0}, {0, 2}}, {{2, 0}, {0, 2}}};
    return got == want;
  }});

  checks.push_back({"two-bottom component is not a regular mosaic", [] {
    auto p = std::make_shared<const Poset>(
        validate_poset({"a", "b", "c"}, {{"a", "b"}, {"c", "b"}}));
    auto l = std::make_shared<const DownsetLattice>(p);
    BipolarExtension ext(l);
    return !is_regular_mosaic(*p) && l->size() == 5 && ext.size() == 11 &&
           tile_union(*l).size() == 9;
  }});

  checks.push_back({"E1 and E2 agree on the worked mesh point", [rat] {
    KaryLattice l(3, 2);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < l.lattice().size(); ++i) values.push_back(Rational(static_cast<long>(1 + i * i)) / 7);
    GeneralizedCapacity cap(l.lattice_ptr(), values);
    ReferenceScale s = ReferenceScale::unipolar({rat("0"), rat("0.5"), rat("1")});
    std::vector<Rational> x = {rat("0.7"), rat("0.1")};
    Rational e1 = e1_eval(l, cap, x, s);
    auto at = [&](KaryNode n) { return cap.value(l.downset_of(n)); };
    Rational hand = rat("0.6") * at({1, 0}) + rat("0.2") * at({2, 0}) + rat("0.2") * at({2, 1});
    return e1 == hand && e1 == e2_eval(l, cap, level_profile(l, x, s).second);
  }});

  checks.push_back({"Möbius form matches the natural extension", [rat] {
    KaryLattice l(3, 2);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < l.lattice().size(); ++i) values.push_back(Rational(static_cast<long>(i % 4)) / 3);
    GeneralizedCapacity cap(l.lattice_ptr(), values);
    Profile f(l.base_ptr(), {rat("0.5"), rat("0.1"), rat("0.3"), rat("0.2")});
    return natural_extension(cap, f) == moebius_form_eval(moebius_transform(cap), f);
  }});

  checks.push_back({"bipolar product formula matches the generic recursion", [] {
    auto p = std::make_shared<const Poset>(validate_poset({"1", "2"}, {}));
    auto l = std::make_shared<const DownsetLattice>(p);
    BipolarExtension ext(l);
    Poset q = ext.as_poset();
    MoebiusContext mu(q);
    for (std::size_t a = 0; a < ext.size(); ++a) {
      for (std::size_t b = 0; b < ext.size(); ++b) {
        if (!bipolar_leq(ext.element(a), ext.element(b))) continue;
        if (mu(a, b) != bipolar_moebius_function(*l, ext.element(a), ext.element(b))) return false;
      }
    }
    return true;
  }});

  return checks;
}

Outcome selftest() {
  Outcome out;
  Json results = Json::array();
  for (const Check& c : selftest_checks()) {
    bool passed = false;
    std::string error;
    try {
      passed = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    Json item{{"name", c.name}, {"passed", passed}};
    if (!error.empty()) item["error"] = error;
    results.push_back(std::move(item));
    out.consistent = out.consistent && passed;
  }
  out.doc = {{"checks", std::move(results)}, {"passed", out.consistent}};
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Natural interpolation of lattice functions (generalized Choquet integrals)",
               "natinterp"};
  app.require_subcommand(1);
  Options o;

  CLI::App* poset = app.add_subcommand("poset", "Poset files")->require_subcommand(1);
  CLI::App* poset_check_cmd = poset->add_subcommand("check", "Validate a poset file");
  poset_check_cmd->add_option("file", o.file, "Poset JSON")->required();
  poset_check_cmd->add_flag("--dot", o.dot, "Emit the Hasse diagram as Graphviz text");

  CLI::App* lattice = app.add_subcommand("lattice", "Lattice files")->require_subcommand(1);
  CLI::App* verify_cmd = lattice->add_subcommand("verify", "Check distributivity, Birkhoff form");
  verify_cmd->add_option("file", o.file, "Lattice JSON")->required();
  verify_cmd->add_flag("--dot", o.dot, "Emit the lattice Hasse diagram");

  CLI::App* mosaic = app.add_subcommand("mosaic", "Bipolar mosaics")->require_subcommand(1);
  CLI::App* mosaic_cmd = mosaic->add_subcommand("check", "Is the bipolar extension a regular mosaic");
  mosaic_cmd->add_option("file", o.file, "Poset or lattice JSON")->required();

  CLI::App* mobius_cmd = app.add_subcommand("mobius", "Möbius transform of a capacity");
  mobius_cmd->add_option("--capacity", o.capacity, "Capacity JSON")->required();
  mobius_cmd->add_flag("--bipolar", o.bipolar, "Capacity is bipolar; transform on L̃");

  CLI::App* choquet = app.add_subcommand("choquet", "Unipolar integral")->require_subcommand(1);
  CLI::App* choquet_cmd = choquet->add_subcommand("eval", "Natural extension of a capacity");
  choquet_cmd->add_option("--capacity", o.capacity, "Capacity JSON")->required();
  choquet_cmd->add_option("--profile", o.profile, "Profile JSON")->required();
  choquet_cmd->add_flag("--decomposition", o.decomposition, "Report chain and weights");

  CLI::App* bipolar = app.add_subcommand("bipolar", "Bipolar structures")->require_subcommand(1);
  CLI::App* bieval_cmd = bipolar->add_subcommand("eval", "Bipolar natural extension");
  bieval_cmd->add_option("--capacity", o.capacity, "Bipolar capacity JSON")->required();
  bieval_cmd->add_option("--profile", o.profile, "Profile JSON")->required();
  bieval_cmd->add_flag("--decomposition", o.decomposition, "Report chain, weights, tile");
  CLI::App* enum_cmd = bipolar->add_subcommand("enumerate", "List the bipolar extension");
  enum_cmd->add_option("file", o.file, "Lattice JSON")->required();
  enum_cmd->add_flag("--dot", o.dot, "Emit the Hasse diagram of L̃");

  CLI::App* kary = app.add_subcommand("kary", "k-ary capacities")->require_subcommand(1);
  CLI::App* kary_cmd = kary->add_subcommand("eval", "Choquet integral on k^n");
  kary_cmd->add_option("--capacity", o.capacity, "k-ary capacity JSON")->required();
  kary_cmd->add_option("--profile", o.profile, "Profile JSON")->required();
  kary_cmd->add_flag("--decomposition", o.decomposition, "Report λ/θ, chain and weights");

  CLI::App* levels = app.add_subcommand("levels", "Reference levels")->require_subcommand(1);
  CLI::App* levels_cmd = levels->add_subcommand("eval", "Score a point against reference levels");
  levels_cmd->add_option("--scale", o.scale, "Scale JSON")->required();
  levels_cmd->add_option("--capacity", o.capacity, "k-ary capacity JSON")->required();
  levels_cmd->add_option("--point", o.point, "Comma-separated scores")->required();
  levels_cmd->add_flag("--bipolar", o.bipolar, "Symmetric scale and bipolar capacity");

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the built-in golden checks");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    Outcome result;
    if (poset_check_cmd->parsed()) {
      result = poset_check(o);
    } else if (verify_cmd->parsed()) {
      result = lattice_verify(o);
    } else if (mosaic_cmd->parsed()) {
      result = mosaic_check(o);
    } else if (mobius_cmd->parsed()) {
      result = mobius(o);
    } else if (choquet_cmd->parsed()) {
      result = choquet_eval(o);
    } else if (bieval_cmd->parsed()) {
      result = bipolar_eval(o);
    } else if (enum_cmd->parsed()) {
      result = bipolar_enumerate(o);
    } else if (kary_cmd->parsed()) {
      Json doc = load(o.capacity);
      result = kary_eval(o, doc);
    } else if (levels_cmd->parsed()) {
      result = levels_eval(o);
    } else if (selftest_cmd->parsed()) {
      result = selftest();
    }
    if (!result.text.empty()) {
      out << result.text;
    } else {
      out << result.doc.dump(2) << "\n";
    }
    if (!result.consistent) {
      err << "error: InvariantBreach: cross-check disagreement\n";
      return kExitInvariant;
    }
    return kExitOk;
  } catch (const Error& e) {
    Json report{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    if (!e.context().empty()) report["context"] = e.context();
    err << report.dump() << "\n";
    return kExitValidation;
  } catch (const InvariantBreach& e) {
    err << "error: InvariantBreach: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace natinterp::cli
