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

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "natinterp/io.hpp"

namespace natinterp {
namespace {

using io::Json;

const std::filesystem::path kData = NATINTERP_DATA_DIR;

struct Invocation {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Invocation run(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.ends_with(".json")) a = (kData / a).string();
  }
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, MosaicCheckWitness) {
  Invocation r = run({"mosaic", "check", "wedge_poset.json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.json(), Json::parse(R"j({"regular_mosaic": false,
                                      "witness_component_bottoms": ["a", "c"]})j"));
  Invocation lattice = run({"mosaic", "check", "wedge_lattice.json"});
  ASSERT_EQ(lattice.code, cli::kExitOk) << lattice.err;
  EXPECT_FALSE(lattice.json()["regular_mosaic"].get<bool>());
}

TEST(CliTest, PosetCheckAndDot) {
  Invocation r = run({"poset", "check", "wedge_poset.json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.json()["downsets"], 5);
  EXPECT_EQ(r.json()["linear_extension"], Json::parse(R"j(["a", "c", "b"])j"));
  Invocation dot = run({"poset", "check", "wedge_poset.json", "--dot"});
  ASSERT_EQ(dot.code, cli::kExitOk);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
}

TEST(CliTest, LatticeVerify) {
  Invocation ok = run({"lattice", "verify", "wedge_lattice.json"});
  ASSERT_EQ(ok.code, cli::kExitOk) << ok.err;
  EXPECT_EQ(ok.json()["size"], 5);
  EXPECT_EQ(ok.json()["complemented"].size(), 2u);
  Invocation bad = run({"lattice", "verify", "pentagon.json"});
  EXPECT_EQ(bad.code, cli::kExitValidation);
  Json err = Json::parse(bad.err);
  EXPECT_EQ(err["error"], "NotDistributive");
  EXPECT_NE(err["context"].get<std::string>().find("pentagon.json"), std::string::npos);
}

TEST(CliTest, ChoquetEvalGrid) {
  Invocation r = run({"choquet", "eval", "--capacity", "kary_3x2_capacity.json", "--profile",
               "profile_3x2.json", "--decomposition"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  Json doc = r.json();
  EXPECT_EQ(doc["value"], "5/24");
  EXPECT_TRUE(doc["agrees"].get<bool>());
  EXPECT_EQ(doc["decomposition"]["weights"],
            Json::parse(R"j(["1/2", "1/5", "1/10", "1/10", "1/10"])j"));
  EXPECT_EQ(doc["decomposition"]["nodes"],
            Json::parse(R"j(["(0,0)", "(1,0)", "(1,1)", "(1,2)", "(2,2)"])j"));
}

TEST(CliTest, ChoquetEvalGeneralLattices) {
  Invocation wedge = run({"choquet", "eval", "--capacity", "wedge_capacity.json", "--profile",
                  "wedge_profile.json"});
  ASSERT_EQ(wedge.code, cli::kExitOk) << wedge.err;
  EXPECT_EQ(wedge.json()["value"], "23/60");
  Invocation boolean = run({"choquet", "eval", "--capacity", "boolean2_capacity.json", "--profile",
                     "boolean2_profile.json"});
  ASSERT_EQ(boolean.code, cli::kExitOk) << boolean.err;
  EXPECT_EQ(boolean.json()["value"], "29/100");
}

TEST(CliTest, BipolarEvalGrid) {
  Invocation r = run({"bipolar", "eval", "--capacity", "kary_3x2_bicapacity.json", "--profile",
               "bipolar_profile_3x2.json", "--decomposition"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  Json doc = r.json();
  EXPECT_EQ(doc["tile"], Json::parse("[1]"));
  EXPECT_TRUE(doc["agrees"].get<bool>());
  Json vertices = doc["decomposition"]["vertices"];
  ASSERT_EQ(vertices.size(), 5u);
  EXPECT_EQ(vertices[1], Json::parse(R"j({"pos": "(1,0)", "neg": "(0,0)"})j"));
  EXPECT_EQ(vertices[4], Json::parse(R"j({"pos": "(2,0)", "neg": "(0,2)"})j"));
}

TEST(CliTest, BipolarEnumerate) {
  Invocation r = run({"bipolar", "enumerate", "wedge_poset.json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  Json doc = r.json();
  EXPECT_EQ(doc["size"], 11);
  EXPECT_EQ(doc["tile_union_size"], 9);
  EXPECT_EQ(doc["outside_tiles"].size(), 2u);
  Invocation dot = run({"bipolar", "enumerate", "wedge_poset.json", "--dot"});
  ASSERT_EQ(dot.code, cli::kExitOk);
  EXPECT_NE(dot.out.find("digraph"), std::string::npos);
}

TEST(CliTest, Mobius) {
  Invocation r = run({"mobius", "--capacity", "boolean2_capacity.json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.json()["agrees"].get<bool>());
  EXPECT_EQ(r.json()["coefficients"].size(), 4u);
}

TEST(CliTest, LevelsEval) {
  Invocation r = run({"levels", "eval", "--scale", "scale.json", "--capacity",
               "kary_3x2_capacity.json", "--point", "0.7,0.1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  Json doc = r.json();
  EXPECT_EQ(doc["value"], "1/4");
  EXPECT_EQ(doc["staircase_value"], "1/4");
  EXPECT_TRUE(doc["agrees"].get<bool>());
  EXPECT_EQ(doc["indexing"]["I"], Json::parse("[2, 1]"));
  EXPECT_EQ(doc["indexing"]["z"], Json::parse(R"j(["2/5", "1/5"])j"));

  Invocation bi = run({"levels", "eval", "--bipolar", "--scale", "symmetric_scale.json", "--capacity",
                "kary_3x2_bicapacity.json", "--point", "0.7,-0.1"});
  ASSERT_EQ(bi.code, cli::kExitOk) << bi.err;
  EXPECT_TRUE(bi.json()["agrees"].get<bool>());
  EXPECT_EQ(bi.json()["value"], bi.json()["choquet"]);

  Invocation outside = run({"levels", "eval", "--scale", "scale.json", "--capacity",
                     "kary_3x2_capacity.json", "--point", "1.5,0.1"});
  EXPECT_EQ(outside.code, cli::kExitValidation);
  EXPECT_EQ(Json::parse(outside.err)["error"], "OutOfScale");
}

TEST(CliTest, KaryEval) {
  Invocation r = run({"kary", "eval", "--capacity", "kary_3x2_capacity.json", "--profile",
               "profile_3x2.json", "--decomposition"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.json()["decomposition"]["lambda"], Json::parse("[1, 1, 2, 2]"));
  EXPECT_EQ(r.json()["decomposition"]["theta"], Json::parse("[1, 2, 2, 1]"));
}

TEST(CliTest, Selftest) {
  Invocation r = run({"selftest"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.out << r.err;
  EXPECT_TRUE(r.json()["passed"].get<bool>());
}

TEST(CliTest, ValidationExits) {
  EXPECT_EQ(run({}).code, cli::kExitValidation);
  EXPECT_EQ(run({"nonsense"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"poset", "check", "missing_file.json"}).code, cli::kExitValidation);
  // A bipolar profile against a unipolar capacity is out of range.
  Invocation r = run({"choquet", "eval", "--capacity", "kary_3x2_capacity.json", "--profile",
               "bipolar_profile_3x2.json"});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_EQ(Json::parse(r.err)["error"], "ValueOutOfRange");
}

}  // namespace
}  // namespace natinterp
