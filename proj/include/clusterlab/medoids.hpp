#ifndef CLUSTERLAB_MEDOIDS_HPP
#define CLUSTERLAB_MEDOIDS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "clusterlab/core.hpp"

namespace clusterlab {

struct MedoidResult {
  std::vector<int> medoids;  // k distinct point indices
  Clustering clustering;     // cluster id = position in medoids; no noise
  double total_cost = 0.0;   // sum over points of distance to nearest medoid
};

/// Greedy seeding: the first medoid minimizes the total distance to all
/// points; each next medoid maximizes the summed cost reduction g_i over the
/// unselected points.
std::vector<int> pam_build(const DistanceMatrix& dm, int k);

/// Exact cost change of replacing medoid `i` with non-medoid `h`: the sum of
/// per-object contributions (the swap test quantity T_ih).
double pam_swap_delta(const DistanceMatrix& dm, std::span<const int> medoids,
                      int i, int h);

/// Steepest-descent swap phase: applies the most negative T_ih swap until
/// none is negative. Ties go to the lexicographically smallest (i, h).
MedoidResult pam_swap(const DistanceMatrix& dm, std::vector<int> medoids);

/// BUILD followed by SWAP on the pairwise distance matrix of ds.
MedoidResult pam(const Dataset& ds, int k, Metric metric = Metric::kEuclidean);

struct ClaraConfig {
  int k = 1;
  int num_samples = 5;
  int sample_size = 0;  // 0 means the 40 + 2k default
  std::uint64_t seed = 0;
};

/// Runs PAM on num_samples random subsets and keeps the medoid set with the
/// lowest full-dataset cost. sample_size is clamped to n.
MedoidResult clara(const Dataset& ds, const ClaraConfig& cfg,
                   Metric metric = Metric::kEuclidean);

}  // namespace clusterlab

#endif  // CLUSTERLAB_MEDOIDS_HPP
