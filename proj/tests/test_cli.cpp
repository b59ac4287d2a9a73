// Copyright 2026 The fairdiv Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fairdiv/cli.hpp"
#include "fairdiv/model.hpp"
#include "fairdiv/undercut.hpp"
#include "json.hpp"
#include "support/fixtures.hpp"

namespace fairdiv::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  args.insert(args.begin(), "fairdiv");
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string DataFile(const std::string& name) {
  return std::string(FAIRDIV_DATA_DIR) + "/" + name;
}

std::string TempFile(const std::string& contents) {
  static int counter = 0;
  const auto path = std::filesystem::temp_directory_path() /
                    ("fairdiv_cli_test_" + std::to_string(counter++) + ".json");
  std::ofstream(path) << contents;
  return path.string();
}

std::string After(const std::string& text, const std::string& marker) {
  const auto pos = text.find(marker);
  REQUIRE(pos != std::string::npos);
  return text.substr(pos + marker.size());
}

TEST_CASE("solve") {
  const std::string path = DataFile("counterexample.json");
  SUBCASE("simplified") {
    const Result r = Call({"solve", path});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("classification: ef_nontrivial\n") != std::string::npos);
    CHECK(r.out.find("split: 1:{a,c} 2:{b,d}\n") != std::string::npos);
    CHECK(r.out.find("trace:") == std::string::npos);
  }
  SUBCASE("second agent first") {
    const Result r = Call({"solve", path, "--first", "2"});
    CHECK(r.out.find("proposer: 2\n") != std::string::npos);
  }
  SUBCASE("original deadlocks") {
    const Result r = Call({"solve", path, "--procedure", "original", "--trace"});
    CHECK(r.code == kExitNoSplit);
    CHECK(r.out.find("classification: deadlock\n") != std::string::npos);
    CHECK(r.out.find("PILE set={c,d}\n") != std::string::npos);
  }
  SUBCASE("text trace replays") {
    const Result r = Call({"solve", path, "--trace"});
    const Profile p = parse_profile(testing::ReadData("counterexample.json"));
    const Outcome o = replay(p, ParseTrace(p.universe(), After(r.out, "trace:\n")));
    CHECK(*o.split == Split{testing::Set("ac"), testing::Set("bd")});
  }
  SUBCASE("json trace replays") {
    const Result r =
        Call({"solve", path, "--procedure", "original", "--trace", "--trace-format", "json"});
    const Profile p = parse_profile(testing::ReadData("counterexample.json"));
    const Outcome o = replay(p, TraceFromJson(p.universe(), After(r.out, "trace:\n")));
    CHECK(o.classification == Classification::kDeadlock);
  }
  SUBCASE("tie handling") {
    const std::string tied = TempFile(R"({"objects":["x","y"],"agents":[
      {"preference":{"kind":"additive","values":{"x":1,"y":1}}},
      {"preference":{"kind":"additive","values":{"x":1,"y":2}}}]})");
    const Result strict = Call({"solve", tied, "--procedure", "original"});
    CHECK(strict.code == kExitError);
    CHECK(strict.err.rfind("error: ", 0) == 0);
    const Result index =
        Call({"solve", tied, "--procedure", "original", "--tie-break", "index", "--trace"});
    CHECK(index.code == kExitOk);
    CHECK(index.out.find("GEN tie-break agent=1 object=x") != std::string::npos);
    std::remove(tied.c_str());
  }
}

TEST_CASE("bundles") {
  const std::string path = DataFile("counterexample.json");
  const Result all = Call({"bundles", path});
  CHECK(all.code == kExitOk);
  CHECK(all.out ==
        "ground: {a,b,c,d}\n"
        "agent 1: [{a,b},{a,c},{a,d},{b,c}]\n"
        "agent 2: [{a,b},{b,c},{b,d},{c,d}]\n");
  const Result pile = Call({"bundles", path, "--ground", "pile", "--agent", "2"});
  CHECK(pile.out == "ground: {c,d}\nagent 2: [{c}]\n");
}

TEST_CASE("validate") {
  const Result r = Call({"validate", DataFile("example1.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("agent h: all_desirable=true separable=true responsive=false\n") !=
        std::string::npos);
  CHECK(r.out.find("  responsive witness: S={d1} x=d2 y=c\n") != std::string::npos);
  CHECK(r.out.find("agent w: all_desirable=true separable=true responsive=true\n") !=
        std::string::npos);
}

TEST_CASE("oracle") {
  const Result r = Call({"oracle", DataFile("example1.json")});
  CHECK(r.code == kExitOk);
  const auto json = nlohmann::json::parse(r.out);
  REQUIRE(json.size() == 1);
  CHECK(json[0]["agent1"] == nlohmann::json::array({"d1", "c"}));
  CHECK(json[0]["agent2"] == nlohmann::json::array({"d2"}));
  CHECK(json[0]["verdict"] == "ef_nontrivial");
}

TEST_CASE("compare") {
  const Result r = Call({"compare", DataFile("counterexample.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("original    deadlock") != std::string::npos);
  CHECK(r.out.find("3 envy-free splits") != std::string::npos);
}

TEST_CASE("simulate") {
  const Result a = Call({"simulate", "--count", "50", "--objects", "4", "--seed", "3"});
  CHECK(a.code == kExitOk);
  CHECK(a.out.find("total=50\n") != std::string::npos);
  CHECK(a.out == Call({"simulate", "--count", "50", "--objects", "4", "--seed", "3"}).out);
  const std::string csv_path = TempFile("");
  const Result csv = Call({"simulate", "--count", "5", "--objects", "3", "--seed", "1",
                           "--generator", "separable-table", "--claims", "2:3", "--csv",
                           csv_path});
  CHECK(csv.code == kExitOk);
  std::ifstream in(csv_path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "seed,n,ef_exists,simplified_verdict,original_verdict,ties_broken");
  std::remove(csv_path.c_str());
  const std::vector<std::string> base = {"simulate", "--seed", "1"};
  auto with = [&](std::vector<std::string> extra) {
    extra.insert(extra.begin(), base.begin(), base.end());
    return Call(extra);
  };
  CHECK(with({"--count", "0", "--objects", "4"}).code == kExitError);
  CHECK(with({"--count", "1", "--objects", "9"}).code == kExitError);
  CHECK(with({"--count", "1", "--objects", "6", "--generator", "separable-table"}).code ==
        kExitError);
  CHECK(with({"--count", "1", "--objects", "4", "--claims", "2"}).code == kExitError);
  CHECK(with({"--count", "1", "--objects", "4", "--claims", "0:1"}).code == kExitError);
}

TEST_CASE("errors") {
  CHECK(Call({}).code == kExitError);
  CHECK(Call({"frobnicate"}).code == kExitError);
  const Result missing = Call({"solve", "/nonexistent/profile.json"});
  CHECK(missing.code == kExitError);
  CHECK(missing.err.rfind("error: ", 0) == 0);
  const std::string bad = TempFile(R"({"objects":["a"],"agents":[]})");
  const Result invalid = Call({"solve", bad});
  CHECK(invalid.code == kExitError);
  CHECK(invalid.err.find("exactly two agents") != std::string::npos);
  std::remove(bad.c_str());
  CHECK(Call({"solve", DataFile("counterexample.json"), "--procedure", "other"}).code ==
        kExitError);
}

}  // namespace
}  // namespace fairdiv::cli
