#ifndef CLUSTERLAB_PRESETS_HPP
#define CLUSTERLAB_PRESETS_HPP

#include <array>
#include <cstdint>

#include "clusterlab/evalgen.hpp"

namespace clusterlab::presets {

/// The three benchmark datasets: 1 = normal x Poisson (4 classes),
/// 2 = bivariate Gaussians (5 classes), 3 = Poisson x Poisson (4 classes).
DatasetSpec dataset(int preset, int n, std::uint64_t seed);

int num_classes(int preset);

struct DbscanRow {
  int min_pts = 0;
  double eps = 0.0;
};

/// The per-dataset DBSCAN parameter choices used by the benchmark rows.
std::array<DbscanRow, 3> dbscan_rows(int preset);

/// Reachability cutoff used when extracting clusters from the OPTICS row.
double optics_threshold(int preset);

/// Default ten-row suite: GMM, k-means, k-means++, OPTICS, CLARA, PAM,
/// UPGMA, and DBSCAN at the three per-dataset parameter pairs. The GMM row
/// times the full model-selection workflow (BIC scan over k = 1..9 and all
/// covariance families, then the diagonal fit at the preset class count).
std::vector<BenchTask> suite(int preset, std::uint64_t seed);

}  // namespace clusterlab::presets

#endif  // CLUSTERLAB_PRESETS_HPP
