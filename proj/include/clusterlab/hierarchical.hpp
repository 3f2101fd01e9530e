#ifndef CLUSTERLAB_HIERARCHICAL_HPP
#define CLUSTERLAB_HIERARCHICAL_HPP

#include <iosfwd>
#include <span>
#include <vector>

#include "clusterlab/core.hpp"

namespace clusterlab {

enum class Linkage { kSingle, kComplete, kUpgma, kWard };

const char* linkage_name(Linkage linkage);
Linkage linkage_from_name(const std::string& name);

/// One agglomerative merge. Node ids: leaves are 0..n-1, the cluster created
/// by merge t is n+t. left < right always.
struct Merge {
  int left = 0;
  int right = 0;
  double height = 0.0;
  int size = 0;  // member count of the merged cluster
};

struct Dendrogram {
  int n = 0;  // leaf count
  std::vector<Merge> merges;  // exactly n-1 entries in merge order
};

/// Distance from a freshly merged cluster (I u J) to cluster K, from the
/// three pre-merge distances and the cluster sizes.
/// For kWard the distances are maintained on squared-Euclidean scale.
double lance_williams_update(double d_ik, double d_jk, double d_ij, int n_i,
                             int n_j, int n_k, Linkage linkage);

/// Sum of squared Euclidean distances from the listed points to their
/// centroid (the Ward objective of a single cluster).
double ess(const Dataset& ds, std::span<const int> members);

/// Bottom-up clustering over all n points. Ward requires
/// Metric::kSquaredEuclidean and records merge heights as the increase of
/// the total within-cluster ESS; the other linkages record the linkage
/// distance of the merged pair.
Dendrogram agglomerate(const Dataset& ds, Linkage linkage, Metric metric);

/// Undoes the last k-1 merges; clusters are numbered by their smallest
/// member index. No noise entries.
Clustering cut(const Dendrogram& dendrogram, int k);

/// CSV export: "left,right,height,size", one merge per row in merge order.
void write_dendrogram_csv(const Dendrogram& dendrogram, std::ostream& out);

}  // namespace clusterlab

#endif  // CLUSTERLAB_HIERARCHICAL_HPP
