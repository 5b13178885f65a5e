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

#include <cmath>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "dpst/corpus.h"
#include "dpst/corpus_store.h"
#include "dpst/embedding.h"
#include "dpst/error.h"
#include "dpst/kmeans.h"
#include "dpst/scorer.h"
#include "dpst/vector_file.h"
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

// Triples built from disjoint vocabulary so no two are near-duplicates.
std::vector<SemanticTriple> DistinctTriples(std::size_t n) {
  std::vector<SemanticTriple> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string tag = std::to_string(i);
    out.push_back({"subj" + tag, "pred" + tag, "obj" + tag});
  }
  return out;
}

VectorMatrix Matrix(std::vector<float> values, std::uint32_t dim) {
  VectorMatrix m;
  m.dimension = dim;
  m.values = std::move(values);
  return m;
}

TEST(IngestTest, ExactDuplicatesRemoved) {
  std::vector<SemanticTriple> in = DistinctTriples(7);
  in.push_back(in[0]);
  in.push_back(in[3]);
  in.push_back(in[3]);
  ASSERT_EQ(in.size(), 10u);
  const StubEmbeddingProvider provider;
  const UnigramSurprisalScorer scorer = UnigramSurprisalScorer::FromTriples(in);
  const Corpus corpus = IngestTriples(in, provider, scorer);
  EXPECT_EQ(corpus.size(), 7u);
  EXPECT_EQ(corpus.raw_count(), 10u);
  EXPECT_EQ(corpus.dimension(), kDefaultEmbeddingDimension);
  std::set<SemanticTriple> unique(corpus.triples().begin(),
                                  corpus.triples().end());
  EXPECT_EQ(unique.size(), 7u);

  const Corpus again = IngestTriples(in, provider, scorer);
  EXPECT_EQ(again.triples(), corpus.triples());
  EXPECT_EQ(again.vectors(), corpus.vectors());
}

TEST(IngestTest, EmptyInputIsEmptyCorpus) {
  const StubEmbeddingProvider provider;
  const UnigramSurprisalScorer scorer;
  EXPECT_EQ(CodeOf([&] { IngestTriples({}, provider, scorer); }),
            ErrorCode::kEmptyCorpus);
}

TEST(IngestTest, SmallBatchesMatchOneBatch) {
  const auto in = DistinctTriples(30);
  const StubEmbeddingProvider provider(8, 3);
  const UnigramSurprisalScorer scorer;
  IngestOptions small;
  small.batch_size = 4;
  EXPECT_EQ(IngestTriples(in, provider, scorer, small).vectors(),
            IngestTriples(in, provider, scorer).vectors());
}

VectorMatrix StubVectors(std::size_t n, std::uint32_t dim, std::uint64_t seed) {
  const StubEmbeddingProvider p(dim, seed);
  std::vector<std::string> texts;
  for (std::size_t i = 0; i < n; ++i) texts.push_back("row " + std::to_string(i));
  VectorMatrix m;
  m.dimension = dim;
  for (const auto& v : EmbedBatch(texts, p)) {
    m.values.insert(m.values.end(), v.values.begin(), v.values.end());
  }
  return m;
}

TEST(KMeansTest, SingleClusterIsNormalizedMean) {
  const VectorMatrix m = StubVectors(40, 8, 1);
  const KMeansResult r = KMeansCluster(m, 1, 0);
  std::vector<double> mean(8, 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (int d = 0; d < 8; ++d) mean[d] += m.row(i)[d];
  }
  double norm = 0;
  for (double x : mean) norm += x * x;
  norm = std::sqrt(norm);
  for (int d = 0; d < 8; ++d) {
    EXPECT_NEAR(r.index.centroid(0)[d], mean[d] / norm, 1e-6);
  }
  for (auto a : r.index.assignments) EXPECT_EQ(a, 0u);
}

TEST(KMeansTest, TwoSeparatedBlobsRecovered) {
  std::vector<int> truth;
  const std::vector<std::vector<double>> centers = {{1, 0, 0, 0},
                                                    {0, 1, 0, 0}};
  const VectorMatrix m =
      Matrix(testing::SphericalBlobs(centers, 60, 0.1, 3, &truth), 4);
  const KMeansResult r = KMeansCluster(m, 2, 17);
  std::vector<int> got(r.index.assignments.begin(), r.index.assignments.end());
  EXPECT_DOUBLE_EQ(testing::AdjustedRandIndex(truth, got), 1.0);
}

TEST(KMeansTest, KEqualsNGivesSingletons) {
  const VectorMatrix m = StubVectors(25, 6, 2);
  const KMeansResult r = KMeansCluster(m, 25, 4);
  for (auto size : ClusterSizes(r.index)) EXPECT_EQ(size, 1u);
}

TEST(KMeansTest, ObjectiveNeverIncreases) {
  const VectorMatrix m = StubVectors(400, 8, 9);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const KMeansResult r = KMeansCluster(m, 12, seed);
    ASSERT_FALSE(r.objective_history.empty());
    for (std::size_t i = 1; i < r.objective_history.size(); ++i) {
      EXPECT_LE(r.objective_history[i], r.objective_history[i - 1] + 1e-9)
          << "iteration " << i;
    }
  }
}

TEST(KMeansTest, PartitionAndCentroidInvariants) {
  const VectorMatrix m = StubVectors(300, 8, 5);
  const KMeansResult r = KMeansCluster(m, 10, 8);
  ASSERT_TRUE(r.converged);
  const auto sizes = ClusterSizes(r.index);
  std::size_t total = 0;
  for (auto s : sizes) {
    EXPECT_GT(s, 0u);
    total += s;
  }
  EXPECT_EQ(total, m.rows());
  for (std::size_t c = 0; c < r.index.k; ++c) {
    std::vector<double> mean(8, 0.0);
    for (auto id : ClusterMemberIds(r.index, c)) {
      for (int d = 0; d < 8; ++d) mean[d] += m.row(id)[d];
    }
    double norm = 0;
    for (double x : mean) norm += x * x;
    norm = std::sqrt(norm);
    for (int d = 0; d < 8; ++d) {
      EXPECT_NEAR(r.index.centroid(c)[d], mean[d] / norm, 1e-4);
    }
  }
}

TEST(KMeansTest, DeterministicForFixedSeed) {
  const VectorMatrix m = StubVectors(200, 8, 6);
  EXPECT_EQ(KMeansCluster(m, 7, 42).index, KMeansCluster(m, 7, 42).index);
}

TEST(KMeansTest, InvalidK) {
  const VectorMatrix m = StubVectors(5, 4, 0);
  EXPECT_EQ(CodeOf([&] { KMeansCluster(m, 0, 0); }), ErrorCode::kInvalidK);
  EXPECT_EQ(CodeOf([&] { KMeansCluster(m, 6, 0); }), ErrorCode::kInvalidK);
}

ClusterIndex ToyIndex() {
  ClusterIndex index;
  index.k = 3;
  index.dimension = 3;
  index.centroids = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  return index;
}

TEST(NearestCentroidTest, Cases) {
  ClusterIndex one;
  one.k = 1;
  one.dimension = 2;
  one.centroids = {0.6f, 0.8f};
  const std::vector<float> any = {-1, 0};
  EXPECT_EQ(NearestCentroid(any, one), 0u);

  const ClusterIndex toy = ToyIndex();
  const std::vector<float> e1 = {0, 1, 0};
  EXPECT_EQ(NearestCentroid(e1, toy), 1u);
  const float h = static_cast<float>(std::sqrt(0.5));
  const std::vector<float> tie = {0, h, h};
  EXPECT_EQ(NearestCentroid(tie, toy), 1u);
  const std::vector<float> short_v = {1, 0};
  EXPECT_EQ(CodeOf([&] { NearestCentroid(short_v, toy); }),
            ErrorCode::kDimensionMismatch);
}

TEST(ClusterMembersTest, ToyAssignmentByHand) {
  // Nine vectors, three near each axis. Hand assignment: rows 0,4,8 -> x;
  // 1,3,7 -> y; 2,5,6 -> z.
  const std::vector<float> rows = {
      0.9f, 0.1f, 0.1f,   0.1f, 0.9f, 0.0f,  0.0f, 0.2f, 0.9f,
      0.2f, 0.9f, 0.1f,   0.8f, 0.0f, 0.3f,  0.1f, 0.0f, 1.0f,
      0.3f, 0.1f, 0.9f,   0.0f, 1.0f, 0.2f,  1.0f, 0.2f, 0.0f};
  std::vector<SemanticTriple> triples;
  VectorMatrix m;
  m.dimension = 3;
  for (int i = 0; i < 9; ++i) {
    triples.push_back({"s" + std::to_string(i), "p", "o"});
    const auto v = NormalizeToUnit(std::span<const float>(rows).subspan(i * 3, 3));
    m.values.insert(m.values.end(), v.values.begin(), v.values.end());
  }
  const Corpus corpus(triples, m, 9);
  ClusterIndex index = ToyIndex();
  for (std::size_t i = 0; i < 9; ++i) {
    index.assignments.push_back(NearestCentroid(corpus.vector(i), index));
  }
  EXPECT_EQ(ClusterMemberIds(index, 0), (std::vector<std::uint32_t>{0, 4, 8}));
  EXPECT_EQ(ClusterMemberIds(index, 1), (std::vector<std::uint32_t>{1, 3, 7}));
  EXPECT_EQ(ClusterMemberIds(index, 2), (std::vector<std::uint32_t>{2, 5, 6}));

  const auto members = ClusterMembers(corpus, index, 2);
  ASSERT_EQ(members.size(), 3u);
  EXPECT_EQ(members[1].id, 5u);
  EXPECT_EQ(members[1].triple, triples[5]);
  EXPECT_EQ(members[1].cluster_ids.at(3), 2u);
  EXPECT_EQ(CodeOf([&] { ClusterMemberIds(index, 3); }),
            ErrorCode::kUnknownCluster);
}

TEST(ClusterMembersTest, PartitionCoversCorpus) {
  const VectorMatrix m = StubVectors(120, 8, 3);
  const KMeansResult r = KMeansCluster(m, 9, 1);
  std::vector<int> seen(m.rows(), 0);
  for (std::size_t c = 0; c < 9; ++c) {
    for (auto id : ClusterMemberIds(r.index, c)) ++seen[id];
  }
  for (int s : seen) EXPECT_EQ(s, 1);
  const KMeansResult one = KMeansCluster(m, 1, 1);
  EXPECT_EQ(ClusterMemberIds(one.index, 0).size(), m.rows());
}

TEST(VectorFileTest, RoundTripIsBitExact) {
  testing::TempDir dir;
  VectorMatrix m = StubVectors(17, 5, 4);
  m.values[3] = -0.0f;
  m.values[7] = std::nextafter(0.25f, 1.0f);
  WriteVectorFile(dir / "v.bin", m);
  const VectorMatrix back = ReadVectorFile(dir / "v.bin");
  ASSERT_EQ(back.dimension, m.dimension);
  ASSERT_EQ(back.values.size(), m.values.size());
  EXPECT_EQ(std::memcmp(back.values.data(), m.values.data(),
                        m.values.size() * sizeof(float)),
            0);
  const std::string bytes = internal::ReadWholeFile(dir / "v.bin");
  EXPECT_EQ(bytes.substr(0, 8), "DPSTVEC1");
  EXPECT_EQ(internal::ReadU32(bytes, 8), 5u);
  EXPECT_EQ(internal::ReadU64(bytes, 12), 17u);
  EXPECT_EQ(bytes.size(), 20u + 17u * 5u * 4u);
}

TEST(VectorFileTest, LittleEndianLayout) {
  testing::TempDir dir;
  WriteVectorFile(dir / "v.bin", Matrix({1.0f}, 1));
  const std::string b = internal::ReadWholeFile(dir / "v.bin");
  // 1.0f = 0x3F800000.
  EXPECT_EQ(b.substr(8, 4), std::string("\x01\x00\x00\x00", 4));
  EXPECT_EQ(b.substr(20, 4), std::string("\x00\x00\x80\x3F", 4));
}

TEST(VectorFileTest, RejectsBadMagicAndTruncation) {
  testing::TempDir dir;
  internal::WriteWholeFile(dir / "bad.bin", "NOTMAGIC");
  EXPECT_EQ(CodeOf([&] { ReadVectorFile(dir / "bad.bin"); }),
            ErrorCode::kFormatError);
  WriteVectorFile(dir / "v.bin", StubVectors(3, 4, 0));
  std::string b = internal::ReadWholeFile(dir / "v.bin");
  b.pop_back();
  internal::WriteWholeFile(dir / "t.bin", b);
  EXPECT_EQ(CodeOf([&] { ReadVectorFile(dir / "t.bin"); }),
            ErrorCode::kFormatError);
}

TEST(ClusterFileTest, RoundTripIsBitExact) {
  testing::TempDir dir;
  const VectorMatrix m = StubVectors(60, 8, 2);
  ClusterIndex index = KMeansCluster(m, 6, 3).index;
  WriteClusterFile(dir / "c.bin", index);
  ClusterIndex back = ReadClusterFile(dir / "c.bin");
  back.seed = index.seed;
  EXPECT_EQ(back, index);
  const std::string b = internal::ReadWholeFile(dir / "c.bin");
  EXPECT_EQ(b.substr(0, 8), "DPSTCLU1");
  EXPECT_EQ(internal::ReadU32(b, 8), 6u);
  EXPECT_EQ(internal::ReadU32(b, 12), 8u);
  EXPECT_EQ(internal::ReadU64(b, 16), 60u);
  EXPECT_EQ(b.size(), 24u + 6u * 8u * 4u + 60u * 4u);
}

TEST(CorpusStoreTest, SaveLoadRoundTrip) {
  testing::TempDir dir;
  const auto in = DistinctTriples(50);
  const StubEmbeddingProvider provider(16, 7);
  const Corpus corpus =
      IngestTriples(in, provider, UnigramSurprisalScorer::FromTriples(in));
  CorpusMeta meta;
  meta.embedding.seed = 7;
  meta.dedup_seed = 3;
  SaveCorpus(dir.path(), corpus, meta);
  const ClusterIndex index = KMeansCluster(corpus.vectors(), 5, 11).index;
  SaveClusterIndex(dir.path(), index);

  const StoredCorpus loaded = LoadCorpus(dir.path());
  EXPECT_EQ(loaded.corpus.triples(), corpus.triples());
  EXPECT_EQ(loaded.corpus.vectors(), corpus.vectors());
  EXPECT_EQ(loaded.meta.dimension, 16u);
  EXPECT_EQ(loaded.meta.embedding.seed, 7u);
  EXPECT_EQ(loaded.meta.dedup_seed, 3u);
  EXPECT_EQ(loaded.meta.stored_count, 50u);
  EXPECT_EQ(loaded.meta.cluster_seeds.at(5), 11u);
  EXPECT_EQ(LoadClusterIndex(dir.path(), 5), index);
  EXPECT_EQ(ClusterFilePath(dir.path(), 5).filename(), "clusters.k5.bin");
  EXPECT_EQ(CodeOf([&] { LoadClusterIndex(dir.path(), 4); }),
            ErrorCode::kInvalidK);
}

TEST(CorpusStoreTest, ClusterFilesAreByteIdenticalAcrossRuns) {
  testing::TempDir a, b;
  const VectorMatrix m = StubVectors(80, 8, 1);
  WriteClusterFile(a / "c.bin", KMeansCluster(m, 4, 9).index);
  WriteClusterFile(b / "c.bin", KMeansCluster(m, 4, 9).index);
  EXPECT_EQ(internal::ReadWholeFile(a / "c.bin"),
            internal::ReadWholeFile(b / "c.bin"));
}

}  // namespace
}  // namespace dpst
