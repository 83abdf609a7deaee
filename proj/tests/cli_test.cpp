/* Copyright 2026 The ordsum Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ordsum/enumerate.hpp"
#include "ordsum/oracle.hpp"

namespace ordsum::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* const kRunning = "cat([fin(w^2),fin(w)];[fin(1)])";

TEST(Cli, EnumBijective) {
  const Result r = Invoke({"enum", "--type", "bij", kRunning});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, to_report(enum_bijective_omega(parse_series(kRunning))));
  EXPECT_NE(r.out.find("w^2+w\t"), std::string::npos);
  EXPECT_NE(r.out.find("w^2+w*2\t"), std::string::npos);
}

TEST(Cli, EnumBoundedMatchesLibrary) {
  const char* s = "cat([];[fin(1,w)])";
  EXPECT_EQ(Invoke({"enum", "--type", "inj", "--bound", "4", s}).out,
            to_report(enum_injective_bounded(parse_series(s), 4)));
  EXPECT_EQ(Invoke({"enum", "--type", "map", "--bound", "2", s}).out,
            to_report(enum_map_bounded(parse_series(s), 2)));
}

TEST(Cli, SimpleVerbs) {
  EXPECT_EQ(Invoke({"psi", "cat([];[fin(1)])"}).out, "w\n");
  EXPECT_EQ(Invoke({"eval", "w+w^2"}).out, "w^2\n");
  EXPECT_EQ(Invoke({"eval", "\xCF\x89*2"}).out, "w*2\n");
  EXPECT_EQ(Invoke({"sum", kRunning}).out, "w^2+w*2\n");
  EXPECT_EQ(Invoke({"tails", kRunning}).out, "values: {w, w*2, w^2+w*2}\nminimum: w\nwitness: 2\n");
}

TEST(Cli, Verify) {
  const Result r = Invoke({"verify", "--depth", "4", kRunning});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("verdict: equal"), std::string::npos);
  const Result shallow = Invoke({"verify", "--depth", "1", kRunning});
  EXPECT_EQ(shallow.code, kMismatch);
  EXPECT_NE(shallow.out.find("verdict: oracle-proper-subset"), std::string::npos);
}

TEST(Cli, Classify) {
  const Result r = Invoke({"classify", "evenodd()", "--series", "cat([cat([];[fin(1)])];[fin(w)])"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("kind: bijection"), std::string::npos);
  EXPECT_NE(r.out.find("remainder: w^2"), std::string::npos);
  EXPECT_NE(r.out.find("sum: w^2*2"), std::string::npos);
  const Result inj = Invoke({"classify", "mask([];[1,0])", "--series", "cat([];[fin(1,w)])"});
  EXPECT_NE(inj.out.find("image: coinfinite_image"), std::string::npos) << inj.out;
}

TEST(Cli, ExplainListsDecomposition) {
  const Result r = Invoke({"explain", kRunning});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("exceptional: 0=w^2 1=w"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("psi: w\n"), std::string::npos);
  EXPECT_NE(r.out.find("w^2+w  ordering (w, w^2)  witness movefront([1,0])"), std::string::npos);
  EXPECT_NE(r.out.find("w^2+w*2  ordering (w^2, w)  witness movefront([0,1])"), std::string::npos);
  const Result two = Invoke({"explain", "cat([cat([];[fin(1)])];[fin(w)])"});
  EXPECT_NE(two.out.find("mu3: w^2"), std::string::npos) << two.out;
}

TEST(Cli, FileInput) {
  const auto path = std::filesystem::temp_directory_path() / "ordsum_cli_series.txt";
  std::ofstream(path) << kRunning << "\n";
  EXPECT_EQ(Invoke({"sum", "@" + path.string()}).out, "w^2+w*2\n");
  std::filesystem::remove(path);
  EXPECT_EQ(Invoke({"sum", "@/nonexistent/ordsum"}).code, kParseError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(Invoke({"eval", "w+"}).code, kParseError);
  EXPECT_EQ(Invoke({"sum", "cat([];[])"}).code, kParseError);
  EXPECT_EQ(Invoke({"enum", "--type", "bij", "fin(1,2)"}).code, kDomainError);
  EXPECT_EQ(Invoke({"enum", "--type", "inj", "cat([cat([];[fin(1)])];[fin(w)])"}).code, kDomainError);
  EXPECT_EQ(Invoke({"classify", "evenodd()", "--series", "cat([];[fin(1)])"}).code, kDomainError);
  EXPECT_EQ(Invoke({"enum", "--type", "all", kRunning}).code, kParseError);
  EXPECT_EQ(Invoke({}).code, kParseError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kParseError);
  EXPECT_EQ(Invoke({"--help"}).code, kOk);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"enum", "--type", "bij", "cat([cat([fin(w^3)];[fin(1)])];[fin(w)])"};
  EXPECT_EQ(Invoke(args).out, Invoke(args).out);
}

}  // namespace
}  // namespace ordsum::cli
