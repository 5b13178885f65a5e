// Copyright 2026 The dpst Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dpst_cli.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.h"

namespace dpst::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<json> JsonLines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(json::parse(line));
  }
  return out;
}

class CliPipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::ofstream t(dir_ / "triples.jsonl");
    for (int i = 0; i < 300; ++i) {
      const std::string n = std::to_string(i);
      t << json{{"s", "agent" + n}, {"p", "act" + n}, {"o", "thing" + n}}.dump()
        << "\n";
    }
    std::ofstream d(dir_ / "docs.jsonl");
    d << json{{"doc_id", "a"}, {"text", "Alice visited Paris. Bob founded Acme."}}
             .dump()
      << "\n"
      << json{{"doc_id", "b"}, {"text", "nothing here"}}.dump() << "\n"
      << json{{"doc_id", "c"}, {"text", "The council approved the plan."}}.dump()
      << "\n";
    d.close();
    t.close();
    ASSERT_EQ(RunCli({"build-corpus", "--triples", Path("triples.jsonl"),
                      "--corpus", Path("corpus"), "--seed", "3"})
                  .code,
              0);
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  testing::TempDir dir_;
};

TEST(CliTest, HelpMentionsFileFormats) {
  const Result r = RunCli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("DPSTVEC1"), std::string::npos);
  EXPECT_NE(r.out.find("DPSTCLU1"), std::string::npos);
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"privatize", "--k", "3", "--input", "x"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"privatize", "--corpus", "c", "--k", "3", "--input", "x",
                    "--avg-words", "5", "--per-doc-words"})
                .code,
            kExitUsage);
  EXPECT_EQ(RunCli({"privatize", "--corpus", "c", "--k", "3", "--input", "x",
                    "--eps-base", "-1"})
                .code,
            kExitUsage);
  EXPECT_EQ(RunCli({"eval"}).code, kExitUsage);
}

TEST(CliTest, RuntimeErrorsExitOne) {
  testing::TempDir dir;
  const Result r = RunCli({"cluster", "--corpus", (dir / "missing").string(),
                           "--k", "2"});
  EXPECT_EQ(r.code, kExitRuntimeError);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliPipelineTest, ClusterIsByteIdenticalAcrossRuns) {
  ASSERT_EQ(RunCli({"cluster", "--corpus", Path("corpus"), "--k", "20",
                    "--seed", "7"})
                .code,
            0);
  const std::string first = Slurp(dir_ / "corpus" / "clusters.k20.bin");
  ASSERT_EQ(RunCli({"cluster", "--corpus", Path("corpus"), "--k", "20",
                    "--seed", "7"})
                .code,
            0);
  EXPECT_EQ(Slurp(dir_ / "corpus" / "clusters.k20.bin"), first);
  EXPECT_EQ(first.substr(0, 8), "DPSTCLU1");
}

TEST_F(CliPipelineTest, PrivatizeReconstructEval) {
  ASSERT_EQ(RunCli({"cluster", "--corpus", Path("corpus"), "--k", "10",
                    "--seed", "1"})
                .code,
            0);
  const std::vector<std::string> base = {
      "privatize",   "--corpus", Path("corpus"), "--k",        "10",
      "--input",     Path("docs.jsonl"),         "--eps-base", "0.1",
      "--avg-words", "575.21",   "--seed",       "5"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
  };
  const Result r1 = RunCli(with({"--output", Path("rec1.jsonl")}));
  ASSERT_EQ(r1.code, 0) << r1.err;
  const Result r4 =
      RunCli(with({"--output", Path("rec4.jsonl"), "--jobs", "4"}));
  ASSERT_EQ(r4.code, 0) << r4.err;
  EXPECT_EQ(Slurp(dir_ / "rec1.jsonl"), Slurp(dir_ / "rec4.jsonl"));

  const auto records = JsonLines(Slurp(dir_ / "rec1.jsonl"));
  ASSERT_EQ(records.size(), 3u);
  for (const auto& r : records) EXPECT_DOUBLE_EQ(r.at("epsilon_doc"), 57.5);
  EXPECT_FALSE(records[0].at("fallback"));
  EXPECT_TRUE(records[1].at("fallback"));
  EXPECT_EQ(records[1].at("text"), "nothing here");
  // One structured log record per document.
  EXPECT_EQ(JsonLines(r1.err).size(), 3u);

  const Result rec = RunCli({"reconstruct", "--input", Path("rec1.jsonl")});
  ASSERT_EQ(rec.code, 0) << rec.err;
  const auto docs = JsonLines(rec.out);
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[1].at("text"), "nothing here");
  EXPECT_FALSE(docs[0].at("text").get<std::string>().empty());

  {
    std::ofstream p(dir_ / "private.jsonl");
    p << rec.out;
  }
  const Result sim = RunCli({"eval", "--original", Path("docs.jsonl"),
                             "--private", Path("private.jsonl")});
  ASSERT_EQ(sim.code, 0) << sim.err;
  const json s = json::parse(sim.out);
  EXPECT_EQ(s.at("pairs"), 3);
  EXPECT_LE(s.at("mean_similarity").get<double>(), 1.0);
}

TEST_F(CliPipelineTest, PrivatizeNeedsBuiltK) {
  const Result r = RunCli({"privatize", "--corpus", Path("corpus"), "--k", "9",
                           "--input", Path("docs.jsonl")});
  EXPECT_EQ(r.code, kExitRuntimeError);
}

TEST_F(CliPipelineTest, BenchReportsConsistentAverages) {
  ASSERT_EQ(RunCli({"cluster", "--corpus", Path("corpus"), "--k", "5"}).code, 0);
  const Result r = RunCli({"bench", "--corpus", Path("corpus"), "--k", "5",
                           "--input", Path("docs.jsonl"), "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("doc_count"), 3);
  EXPECT_EQ(j.at("word_count"), 13);
  const double total = j.at("total_seconds");
  EXPECT_NEAR(j.at("avg_per_doc").get<double>() * 3, total, 1e-9);
  EXPECT_NEAR(j.at("avg_per_word").get<double>() * 13, total, 1e-9);
}

TEST(CliEvalTest, ScoreFileTable) {
  testing::TempDir dir;
  {
    std::ofstream f(dir / "s.jsonl");
    f << R"j({"dataset":"Reuters","method":"baseline","geval":0.697,"ep_static":12.35,"ep_adaptive":12.35})j"
      << "\n"
      << R"j({"dataset":"Reuters","method":"DP-Prompt (Large)","epsilon_base":0.1,"geval":0.349,"ep_static":2.39,"ep_adaptive":3.0})j"
      << "\n";
  }
  const Result text = RunCli({"eval", "--scores", (dir / "s.jsonl").string()});
  ASSERT_EQ(text.code, 0) << text.err;
  EXPECT_NE(text.out.find("0.307"), std::string::npos);
  const Result js = RunCli(
      {"eval", "--scores", (dir / "s.jsonl").string(), "--format", "json"});
  ASSERT_EQ(js.code, 0);
  EXPECT_NEAR(json::parse(js.out).at("rg_static").get<double>(), 0.307, 0.001);
}

}  // namespace
}  // namespace dpst::cli
