#ifndef CLUSTERLAB_DENSITY_HPP
#define CLUSTERLAB_DENSITY_HPP

#include <iosfwd>
#include <limits>
#include <vector>

#include "clusterlab/core.hpp"

namespace clusterlab {

/// Sentinel for undefined core/reachability distances; exported as "inf".
inline constexpr double kUndefinedDistance =
    std::numeric_limits<double>::infinity();

struct DbscanConfig {
  double eps = 1.0;
  int min_pts = 5;
};

/// Density clustering with noise. Neighborhoods are closed balls (<= eps)
/// and include the query point itself. Points are processed in index order,
/// so border points go to the first cluster that reaches them.
Clustering dbscan(const Dataset& ds, const DbscanConfig& cfg,
                  Metric metric = Metric::kEuclidean);

/// Distance of every point to its k-th nearest neighbor (self excluded),
/// sorted descending. The knee of this curve is the usual eps estimate.
std::vector<double> kdist_curve(const Dataset& ds, int k,
                                Metric metric = Metric::kEuclidean);

struct ReachRecord {
  int point = 0;
  double reachability = kUndefinedDistance;
  double core_distance = kUndefinedDistance;
};

struct OpticsOrdering {
  std::vector<ReachRecord> records;  // a permutation of all points
  double eps = kUndefinedDistance;
  int min_pts = 0;
};

/// Priority-queue expansion in index order with lowest-index tie-breaks.
/// core_distance is the distance to the min_pts-th nearest neighbor counting
/// the point itself, undefined when the eps-neighborhood is too small.
OpticsOrdering optics(const Dataset& ds, int min_pts,
                      double eps = kUndefinedDistance,
                      Metric metric = Metric::kEuclidean);

/// Scans the ordering: reachability <= threshold joins the current cluster;
/// otherwise a record opens a new cluster when its core distance is within
/// the threshold and is noise when not.
Clustering extract_clusters(const OpticsOrdering& ordering, double threshold);

/// CSV export: "order,point,reachability,core_distance".
void write_reachability_csv(const OpticsOrdering& ordering, std::ostream& out);

/// CSV export: "rank,kdist".
void write_kdist_csv(const std::vector<double>& kdist, std::ostream& out);

}  // namespace clusterlab

#endif  // CLUSTERLAB_DENSITY_HPP
