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
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dpst/error.h"
#include "dpst/extractor.h"
#include "dpst/minhash.h"
#include "dpst/scorer.h"
#include "dpst/text.h"
#include "dpst/triples.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dpst {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

TEST(ParseTripleTest, SplitsOnPipe) {
  const SemanticTriple t = ParseTriple("Mark Zuckerberg | founded | Facebook");
  EXPECT_EQ(t.subject, "Mark Zuckerberg");
  EXPECT_EQ(t.predicate, "founded");
  EXPECT_EQ(t.object, "Facebook");
  EXPECT_EQ(ParseTriple("a | b | c"), (SemanticTriple{"a", "b", "c"}));
}

TEST(ParseTripleTest, TrimsFields) {
  EXPECT_EQ(ParseTriple("  a  |  b |c "), (SemanticTriple{"a", "b", "c"}));
}

TEST(ParseTripleTest, RejectsWrongFieldCount) {
  EXPECT_EQ(CodeOf([] { ParseTriple("a | b"); }), ErrorCode::kMalformedTriple);
  EXPECT_EQ(CodeOf([] { ParseTriple("a | b | c | d"); }),
            ErrorCode::kMalformedTriple);
  EXPECT_EQ(CodeOf([] { ParseTriple("a |  | c"); }),
            ErrorCode::kMalformedTriple);
}

TEST(FormatTripleTest, JoinsWithPipe) {
  EXPECT_EQ(FormatTriple({"Mark Zuckerberg", "founded", "Facebook"}),
            "Mark Zuckerberg | founded | Facebook");
}

TEST(FormatTripleTest, RoundTripsRandomTriples) {
  std::mt19937_64 gen(11);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyzABC0123456789 _-.,'";
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  auto field = [&] {
    std::string s;
    while (Trim(s).empty() || Trim(s) != s) {
      s.clear();
      const std::size_t n = len(gen);
      for (std::size_t i = 0; i < n; ++i) s.push_back(alphabet[pick(gen)]);
    }
    return s;
  };
  for (int i = 0; i < 1000; ++i) {
    const SemanticTriple t{field(), field(), field()};
    ASSERT_EQ(ParseTriple(FormatTriple(t)), t) << FormatTriple(t);
  }
}

TEST(HeuristicExtractorTest, SimpleSentence) {
  const HeuristicExtractor ex;
  const auto triples = ExtractTriples("d", "Mark Zuckerberg founded Facebook.", ex);
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(triples[0],
            (SemanticTriple{"Mark Zuckerberg", "founded", "Facebook"}));
}

TEST(HeuristicExtractorTest, StripsStopwordsAndSkipsVerbless) {
  const HeuristicExtractor ex;
  const auto triples = ExtractTriples(
      "d", "The committee approved the new budget. Hello there! Yes.", ex);
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(triples[0], (SemanticTriple{"committee", "approved", "new budget"}));
}

TEST(HeuristicExtractorTest, BlankDocumentHasNoTriples) {
  const HeuristicExtractor ex;
  EXPECT_TRUE(ExtractTriples("d", "", ex).empty());
  EXPECT_TRUE(ExtractTriples("d", " \n\t", ex).empty());
}

TEST(ImportedExtractorTest, ReadsJsonLines) {
  testing::TempDir dir;
  {
    std::ofstream f(dir / "x.jsonl");
    f << R"({"doc_id": "a", "triples": [{"s": "I", "p": "was", "o": "angry"}]})"
      << "\n\n"
      << R"({"doc_id": "b", "triples": []})" << "\n";
  }
  const ImportedExtractor ex = ImportedExtractor::FromFile(dir / "x.jsonl");
  EXPECT_EQ(ex.size(), 2u);
  const auto a = ex.Extract("a", "ignored text");
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], (SemanticTriple{"I", "was", "angry"}));
  EXPECT_TRUE(ex.Extract("b", "x").empty());
  EXPECT_EQ(CodeOf([&] { ex.Extract("zzz", "x"); }),
            ErrorCode::kMissingExtraction);
}

std::vector<std::uint64_t> HashTokens(const std::vector<int>& ids) {
  std::vector<std::uint64_t> out;
  for (int id : ids) out.push_back(static_cast<std::uint64_t>(id) * 7919 + 13);
  return out;
}

TEST(MinHashTest, SameTextSameSignature) {
  const auto a = ComputeMinHash("the quick brown fox", 5);
  const auto b = ComputeMinHash("the quick brown fox", 5);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.num_permutations(), kMinHashPermutations);
  EXPECT_DOUBLE_EQ(EstimateJaccard(a, b), 1.0);
}

TEST(MinHashTest, EmptyTextIsSentinel) {
  const auto s = ComputeMinHash("  ... ", 1);
  for (auto v : s.values) EXPECT_EQ(v, MinHashSignature::kEmptySentinel);
}

TEST(MinHashTest, DisjointTokensEstimateNearZero) {
  const auto a = ComputeMinHash("alpha beta gamma delta epsilon", 3);
  const auto b = ComputeMinHash("zeta eta theta iota kappa", 3);
  EXPECT_LE(EstimateJaccard(a, b), 0.05);
}

TEST(MinHashTest, HalfOverlapEstimate) {
  // {0..29} vs {10..39}: 20 shared of 40 -> exact Jaccard 0.5.
  std::vector<int> x, y;
  for (int i = 0; i < 30; ++i) x.push_back(i);
  for (int i = 10; i < 40; ++i) y.push_back(i);
  // One seed has sd ~0.044 at 128 permutations; average over seeds.
  double sum = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto a = ComputeMinHash(HashTokens(x), seed);
    const auto b = ComputeMinHash(HashTokens(y), seed);
    sum += EstimateJaccard(a, b);
  }
  EXPECT_NEAR(sum / 200, 0.5, 0.01);
}

TEST(MinHashTest, CaseAndPunctuationInsensitive) {
  EXPECT_EQ(ComputeMinHash("Mark Zuckerberg | founded | Facebook", 0),
            ComputeMinHash("mark zuckerberg founded facebook", 0));
}

TEST(ChooseBandingTest, DefaultThreshold) {
  const LshBanding b = ChooseBanding(0.4);
  EXPECT_EQ(b.bands, 32u);
  EXPECT_EQ(b.rows, 4u);
  EXPECT_EQ(CodeOf([] { ChooseBanding(0.0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { ChooseBanding(1.0); }), ErrorCode::kInvalidArgument);
}

// Scores from a table; anything else scores 1.
TableScorer Scores(std::map<std::string, double> m) {
  return TableScorer(std::move(m), 1.0);
}

TEST(DedupTest, IdenticalTriplesCollapse) {
  const std::vector<SemanticTriple> in = {{"a", "b", "c"}, {"a", "b", "c"}};
  const auto out = DedupTriples(in, Scores({}), 0.4, 0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], in[0]);
}

TEST(DedupTest, LowerScoreWinsTheBucket) {
  // Same token set, so identical signatures and shared buckets.
  const SemanticTriple a{"Alice", "likes", "Bob"};
  const SemanticTriple b{"alice", "likes", "bob"};
  const std::vector<SemanticTriple> in = {a, b};
  const auto scorer =
      Scores({{FormatTriple(a), 5.0}, {FormatTriple(b), 3.0}});
  const auto out = DedupTriples(in, scorer, 0.4, 0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], b);
}

TEST(DedupTest, TiesGoToSmallerString) {
  const SemanticTriple a{"alice", "likes", "bob"};
  const SemanticTriple b{"Alice", "likes", "Bob"};
  const std::vector<SemanticTriple> in = {a, b};
  const auto out = DedupTriples(in, Scores({}), 0.4, 0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], b);  // "Alice..." < "alice..."
}

TEST(DedupTest, DisjointTriplesAllSurviveInOrder) {
  const std::vector<SemanticTriple> in = {{"red", "eats", "apples"},
                                          {"blue", "drives", "trucks"},
                                          {"green", "reads", "novels"}};
  EXPECT_EQ(DedupTriples(in, Scores({}), 0.4, 9), in);
}

std::vector<SemanticTriple> RandomOverlappingTriples(std::uint64_t seed,
                                                     std::size_t n) {
  std::mt19937_64 gen(seed);
  const std::vector<std::string> words = {"cat", "dog", "bird", "fish",
                                          "sees", "eats", "likes", "big",
                                          "small", "red", "blue", "tree"};
  std::uniform_int_distribution<std::size_t> w(0, words.size() - 1);
  std::uniform_int_distribution<int> len(1, 2);
  auto phrase = [&] {
    std::string s = words[w(gen)];
    if (len(gen) == 2) s += " " + words[w(gen)];
    return s;
  };
  std::vector<SemanticTriple> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({phrase(), phrase(), phrase()});
  return out;
}

TEST(DedupTest, IdempotentAndSubset) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto in = RandomOverlappingTriples(seed, 40);
    const auto scorer = UnigramSurprisalScorer::FromTriples(in);
    const auto once = DedupTriples(in, scorer, 0.4, seed);
    const auto twice = DedupTriples(once, scorer, 0.4, seed);
    EXPECT_EQ(once, twice) << "seed " << seed;
    const std::set<SemanticTriple> domain(in.begin(), in.end());
    std::set<SemanticTriple> seen;
    for (const auto& t : once) {
      EXPECT_TRUE(domain.contains(t));
      EXPECT_TRUE(seen.insert(t).second) << "duplicate survivor";
    }
  }
}

TEST(UnigramSurprisalScorerTest, RareTokensScoreHigher) {
  const std::vector<SemanticTriple> ref = {
      {"the cat", "sat", "mat"}, {"the cat", "ate", "fish"},
      {"the dog", "sat", "mat"}};
  const auto scorer = UnigramSurprisalScorer::FromTriples(ref);
  const double common = scorer.Score({"the", "sat", "mat"});
  const double rare = scorer.Score({"dog", "ate", "fish"});
  EXPECT_LT(common, rare);
  EXPECT_GE(scorer.Score({"zzz", "yyy", "xxx"}), rare);
  EXPECT_EQ(UnigramSurprisalScorer().Score({"a", "b", "c"}), 0.0);
}

TEST(TableScorerTest, ReadsFile) {
  testing::TempDir dir;
  {
    std::ofstream f(dir / "s.jsonl");
    f << R"({"triple": "a | b | c", "score": 2.5})" << "\n";
  }
  const TableScorer s = TableScorer::FromFile(dir / "s.jsonl", 9.0);
  EXPECT_EQ(s.Score({"a", "b", "c"}), 2.5);
  EXPECT_EQ(s.Score({"x", "y", "z"}), 9.0);
}

}  // namespace
}  // namespace dpst
