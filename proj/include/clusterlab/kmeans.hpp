#ifndef CLUSTERLAB_KMEANS_HPP
#define CLUSTERLAB_KMEANS_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "clusterlab/core.hpp"

namespace clusterlab {

enum class KMeansInit { kForgy, kRandomPartition, kPlusPlus };

const char* kmeans_init_name(KMeansInit init);
KMeansInit kmeans_init_from_name(const std::string& name);

struct KMeansConfig {
  int k = 1;
  KMeansInit init = KMeansInit::kForgy;
  std::uint64_t seed = 0;
  int max_iter = 300;
  double tol = 1e-6;  // relative WCSS change
};

struct KMeansResult {
  std::vector<double> centers;  // k x d row-major
  Clustering clustering;        // no noise entries
  double wcss = 0.0;
  int iterations = 0;
  std::vector<double> wcss_trace;  // one entry per Lloyd iteration
};

/// Within-cluster sum of squared Euclidean distances of each point to its
/// assigned center.
double wcss_of(const Dataset& ds, const std::vector<double>& centers,
               const Clustering& clustering);

/// Draws the next seeding center: probability of each point proportional to
/// its squared distance to the nearest already-chosen center. Points
/// coinciding with a chosen center have weight zero.
int kmeanspp_next_center(const Dataset& ds, const std::vector<int>& chosen,
                         std::mt19937_64& rng);

/// D^2-weighted seeding: first center uniform, then kmeanspp_next_center
/// until k centers are chosen. Returns point indices of k distinct points.
std::vector<int> kmeanspp_seed(const Dataset& ds, int k, std::uint64_t seed);

/// Lloyd iteration from explicit initial centers (k x d row-major).
KMeansResult lloyd(const Dataset& ds, std::vector<double> centers,
                   int max_iter = 300, double tol = 1e-6);

KMeansResult kmeans(const Dataset& ds, const KMeansConfig& cfg);

struct WcssPoint {
  int k = 0;
  double wcss = 0.0;
};

/// Best WCSS over `restarts` seeded runs for each k in [k_min, k_max];
/// feeds the elbow-method plot.
std::vector<WcssPoint> wcss_curve(const Dataset& ds, int k_min, int k_max,
                                  const KMeansConfig& base, int restarts);

/// CSV export: "k,wcss".
void write_wcss_csv(const std::vector<WcssPoint>& curve, std::ostream& out);

}  // namespace clusterlab

#endif  // CLUSTERLAB_KMEANS_HPP
