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

#ifndef DPST_KMEANS_H_
#define DPST_KMEANS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dpst/vector_file.h"

namespace dpst {

// k unit-norm centroids plus a partition of the corpus rows. Immutable once
// built; safe to share across threads.
struct ClusterIndex {
  std::uint32_t k = 0;
  std::uint32_t dimension = 0;
  std::uint64_t seed = 0;
  // k rows of `dimension` floats.
  std::vector<float> centroids;
  // Cluster of corpus row i.
  std::vector<std::uint32_t> assignments;

  std::span<const float> centroid(std::size_t c) const {
    return std::span<const float>(centroids).subspan(c * dimension, dimension);
  }
  std::size_t corpus_size() const { return assignments.size(); }

  friend bool operator==(const ClusterIndex&, const ClusterIndex&) = default;
};

struct KMeansOptions {
  int max_iterations = 100;
  // Stop once no centroid moves farther than this (Euclidean).
  double tolerance = 1e-4;
};

struct KMeansResult {
  ClusterIndex index;
  // Within-cluster sum of squared distances after each assignment step.
  std::vector<double> objective_history;
  int iterations = 0;
  bool converged = false;
};

// Spherical Lloyd iterations from a seeded k-means++ start. Rows are
// expected to be unit vectors; centroids are renormalized means, so
// assignment by maximal cosine equals assignment by minimal Euclidean
// distance. A cluster that empties is reseeded with the point least similar
// to its own centroid (taken from a cluster with at least two members).
// Throws InvalidK unless 1 <= k <= rows.
KMeansResult KMeansCluster(const VectorMatrix& vectors, std::size_t k,
                           std::uint64_t seed, const KMeansOptions& options = {});

// Argmax of cosine similarity over centroids; ties go to the lower index.
// Throws DimensionMismatch.
std::uint32_t NearestCentroid(std::span<const float> v,
                              const ClusterIndex& index);

// Row ids assigned to cluster c, ascending. Throws UnknownCluster.
std::vector<std::uint32_t> ClusterMemberIds(const ClusterIndex& index,
                                            std::size_t c);

std::vector<std::size_t> ClusterSizes(const ClusterIndex& index);

// Sum over rows of |x - centroid(assignment)|^2.
double WithinClusterSumOfSquares(const VectorMatrix& vectors,
                                 const ClusterIndex& index);

}  // namespace dpst

#endif  // DPST_KMEANS_H_
