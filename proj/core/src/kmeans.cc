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

#include "dpst/kmeans.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dpst/embedding.h"
#include "dpst/error.h"
#include "dpst/random.h"

namespace dpst {
namespace {

using Matrix = std::vector<double>;  // row-major, `dim` columns

double Dot(std::span<const float> x, const double* c, std::size_t dim) {
  double s = 0.0;
  for (std::size_t j = 0; j < dim; ++j) s += static_cast<double>(x[j]) * c[j];
  return s;
}

double SquaredDistance(std::span<const float> x, const double* c,
                       std::size_t dim) {
  double s = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    const double d = static_cast<double>(x[j]) - c[j];
    s += d * d;
  }
  return s;
}

Matrix KMeansPlusPlus(const VectorMatrix& vectors, std::size_t k, Rng& rng) {
  const std::size_t n = vectors.rows();
  const std::size_t dim = vectors.dimension;
  Matrix centers(k * dim);
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());

  auto set_center = [&](std::size_t c, std::size_t row) {
    const auto x = vectors.row(row);
    std::copy(x.begin(), x.end(), centers.begin() + c * dim);
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i],
                       SquaredDistance(vectors.row(i), &centers[c * dim], dim));
    }
  };

  set_center(0, rng.Below(n));
  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (double v : d2) total += v;
    std::size_t chosen = n;
    if (total > 0.0) {
      const double target = rng.UniformDouble() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (d2[i] > 0.0 && acc > target) {
          chosen = i;
          break;
        }
      }
      if (chosen == n) {
        // Rounding left target past the last positive weight.
        for (std::size_t i = n; i-- > 0;) {
          if (d2[i] > 0.0) {
            chosen = i;
            break;
          }
        }
      }
    } else {
      // All remaining points coincide with a center; any row will do.
      chosen = rng.Below(n);
    }
    set_center(c, chosen);
  }
  return centers;
}

void NormalizeRows(Matrix& m, std::size_t dim) {
  for (std::size_t r = 0; r * dim < m.size(); ++r) {
    double sq = 0.0;
    for (std::size_t j = 0; j < dim; ++j) sq += m[r * dim + j] * m[r * dim + j];
    if (sq == 0.0) continue;
    const double inv = 1.0 / std::sqrt(sq);
    for (std::size_t j = 0; j < dim; ++j) m[r * dim + j] *= inv;
  }
}

}  // namespace

KMeansResult KMeansCluster(const VectorMatrix& vectors, std::size_t k,
                           std::uint64_t seed, const KMeansOptions& options) {
  const std::size_t n = vectors.rows();
  const std::size_t dim = vectors.dimension;
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidK, "k=" + std::to_string(k) +
                                          " outside [1, " + std::to_string(n) +
                                          "]");
  }

  Rng rng(seed);
  Matrix centers = KMeansPlusPlus(vectors, k, rng);
  NormalizeRows(centers, dim);

  KMeansResult result;
  std::vector<std::uint32_t> assign(n, 0);
  std::vector<double> best_sim(n, 0.0);
  std::vector<std::size_t> sizes(k, 0);

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    // Assignment.
    std::fill(sizes.begin(), sizes.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = vectors.row(i);
      std::uint32_t best = 0;
      double best_dot = Dot(x, &centers[0], dim);
      for (std::size_t c = 1; c < k; ++c) {
        const double d = Dot(x, &centers[c * dim], dim);
        if (d > best_dot) {
          best_dot = d;
          best = static_cast<std::uint32_t>(c);
        }
      }
      assign[i] = best;
      best_sim[i] = best_dot;
      ++sizes[best];
    }

    // Empty-cluster repair.
    std::vector<bool> moved(n, false);
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] != 0) continue;
      std::size_t far = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (moved[i] || sizes[assign[i]] < 2) continue;
        if (far == n || best_sim[i] < best_sim[far]) far = i;
      }
      if (far == n) break;  // unreachable for k <= n
      --sizes[assign[far]];
      assign[far] = static_cast<std::uint32_t>(c);
      ++sizes[c];
      moved[far] = true;
      const auto x = vectors.row(far);
      std::copy(x.begin(), x.end(), centers.begin() + c * dim);
    }

    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sse += SquaredDistance(vectors.row(i), &centers[assign[i] * dim], dim);
    }
    result.objective_history.push_back(sse);

    // Update.
    Matrix next(k * dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = vectors.row(i);
      double* dst = &next[assign[i] * dim];
      for (std::size_t j = 0; j < dim; ++j) dst[j] += x[j];
    }
    NormalizeRows(next, dim);
    double max_shift = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      double norm_sq = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        norm_sq += next[c * dim + j] * next[c * dim + j];
      }
      if (norm_sq == 0.0) {
        // Members cancel out exactly; keep the previous direction.
        std::copy_n(&centers[c * dim], dim, &next[c * dim]);
      }
      double shift = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        const double d = next[c * dim + j] - centers[c * dim + j];
        shift += d * d;
      }
      max_shift = std::max(max_shift, std::sqrt(shift));
    }
    centers = std::move(next);
    result.iterations = iter + 1;
    if (max_shift < options.tolerance) {
      result.converged = true;
      break;
    }
  }

  ClusterIndex& index = result.index;
  index.k = static_cast<std::uint32_t>(k);
  index.dimension = static_cast<std::uint32_t>(dim);
  index.seed = seed;
  index.centroids.assign(centers.begin(), centers.end());
  index.assignments = std::move(assign);
  return result;
}

std::uint32_t NearestCentroid(std::span<const float> v,
                              const ClusterIndex& index) {
  if (v.size() != index.dimension) {
    throw Error(ErrorCode::kDimensionMismatch,
                "query is " + std::to_string(v.size()) + "-d, index is " +
                    std::to_string(index.dimension) + "-d");
  }
  if (index.k == 0) {
    throw Error(ErrorCode::kUnknownCluster, "index has no centroids");
  }
  std::uint32_t best = 0;
  double best_sim = CosineSimilarity(v, index.centroid(0));
  for (std::uint32_t c = 1; c < index.k; ++c) {
    const double sim = CosineSimilarity(v, index.centroid(c));
    if (sim > best_sim) {
      best_sim = sim;
      best = c;
    }
  }
  return best;
}

std::vector<std::uint32_t> ClusterMemberIds(const ClusterIndex& index,
                                            std::size_t c) {
  if (c >= index.k) {
    throw Error(ErrorCode::kUnknownCluster,
                "cluster " + std::to_string(c) + " of k=" +
                    std::to_string(index.k));
  }
  std::vector<std::uint32_t> ids;
  for (std::size_t i = 0; i < index.assignments.size(); ++i) {
    if (index.assignments[i] == c) ids.push_back(static_cast<std::uint32_t>(i));
  }
  return ids;
}

std::vector<std::size_t> ClusterSizes(const ClusterIndex& index) {
  std::vector<std::size_t> sizes(index.k, 0);
  for (std::uint32_t a : index.assignments) ++sizes.at(a);
  return sizes;
}

double WithinClusterSumOfSquares(const VectorMatrix& vectors,
                                 const ClusterIndex& index) {
  double sse = 0.0;
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    const auto x = vectors.row(i);
    const auto c = index.centroid(index.assignments.at(i));
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double d = static_cast<double>(x[j]) - c[j];
      sse += d * d;
    }
  }
  return sse;
}

}  // namespace dpst
