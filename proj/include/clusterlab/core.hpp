#ifndef CLUSTERLAB_CORE_HPP
#define CLUSTERLAB_CORE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace clusterlab {

/// Assignment value for points that belong to no cluster. Distinct from every
/// valid cluster id (those are >= 0); serialized as null in JSON exports.
inline constexpr int kNoise = -1;

enum class Metric {
  kEuclidean,
  kSquaredEuclidean,  // not a metric proper: violates the triangle inequality
  kManhattan,
};

const char* metric_name(Metric metric);
Metric metric_from_name(const std::string& name);

/// n points in d dimensions stored row-major in one contiguous buffer,
/// optionally carrying ground-truth class labels in {0..c-1}.
class Dataset {
 public:
  Dataset(std::vector<double> coords, int dim);
  Dataset(std::vector<double> coords, int dim, std::vector<int> labels);

  int size() const { return n_; }
  int dim() const { return d_; }

  bool has_labels() const { return !labels_.empty(); }
  int num_classes() const { return num_classes_; }
  const std::vector<int>& labels() const { return labels_; }

  std::span<const double> point(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * d_,
            static_cast<std::size_t>(d_)};
  }
  const std::vector<double>& coords() const { return coords_; }

 private:
  std::vector<double> coords_;
  std::vector<int> labels_;
  int n_ = 0;
  int d_ = 0;
  int num_classes_ = 0;
};

double distance(std::span<const double> p, std::span<const double> q,
                Metric metric);

/// Squared Euclidean distance without the metric dispatch; the inner kernel
/// of k-means and k-means++.
double squared_euclidean(std::span<const double> p, std::span<const double> q);

/// Symmetric n x n matrix of pairwise distances with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<double> entries);

  static DistanceMatrix compute(const Dataset& ds, Metric metric);

  int size() const { return n_; }
  double operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * n_ + j];
  }

 private:
  int n_ = 0;
  std::vector<double> entries_;  // row-major n x n
};

/// Per-point cluster assignment: each entry is a cluster id in [0, k) or
/// kNoise.
struct Clustering {
  std::vector<int> assignment;
  int k = 0;
};

/// Throws std::invalid_argument if the assignment violates the Clustering
/// contract (ids out of range, k inconsistent).
void validate(const Clustering& c);

/// Stateless seed derivation for sub-tasks (restarts, samples, scan cells).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Worker threads used by parallelizable kernels. 0 or 1 means sequential.
/// Initialized from CLUSTER_LAB_THREADS (default 0).
int thread_budget();
void set_thread_budget(int threads);

/// Runs fn(i) for i in [0, n). Parallel iterations write disjoint outputs,
/// so results are identical to the sequential order.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace clusterlab

#endif  // CLUSTERLAB_CORE_HPP
