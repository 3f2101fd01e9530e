#include "clusterlab/core.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace clusterlab {

const char* metric_name(Metric metric) {
  switch (metric) {
    case Metric::kEuclidean: return "euclidean";
    case Metric::kSquaredEuclidean: return "sqeuclidean";
    case Metric::kManhattan: return "manhattan";
  }
  return "?";
}

Metric metric_from_name(const std::string& name) {
  if (name == "euclidean") return Metric::kEuclidean;
  if (name == "sqeuclidean") return Metric::kSquaredEuclidean;
  if (name == "manhattan") return Metric::kManhattan;
  throw std::invalid_argument("unknown metric: " + name);
}

namespace {

void check_coords(const std::vector<double>& coords, int dim) {
  if (dim < 1) throw std::invalid_argument("dataset dimension must be >= 1");
  if (coords.empty()) throw std::invalid_argument("dataset must be nonempty");
  if (coords.size() % static_cast<std::size_t>(dim) != 0)
    throw std::invalid_argument("coordinate buffer not a multiple of dim");
  for (double v : coords)
    if (!std::isfinite(v))
      throw std::invalid_argument("coordinates must be finite");
}

int check_labels(const std::vector<int>& labels, int n) {
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("labels.size() must equal point count");
  int c = 0;
  for (int id : labels) {
    if (id < 0) throw std::invalid_argument("class ids must be >= 0");
    c = std::max(c, id + 1);
  }
  std::vector<bool> seen(c, false);
  for (int id : labels) seen[id] = true;
  for (int id = 0; id < c; ++id)
    if (!seen[id])
      throw std::invalid_argument("class ids must cover {0..c-1}");
  return c;
}

}  // namespace

Dataset::Dataset(std::vector<double> coords, int dim)
    : coords_(std::move(coords)), d_(dim) {
  check_coords(coords_, dim);
  n_ = static_cast<int>(coords_.size()) / dim;
}

Dataset::Dataset(std::vector<double> coords, int dim, std::vector<int> labels)
    : coords_(std::move(coords)), labels_(std::move(labels)), d_(dim) {
  check_coords(coords_, dim);
  n_ = static_cast<int>(coords_.size()) / dim;
  num_classes_ = check_labels(labels_, n_);
}

double squared_euclidean(std::span<const double> p, std::span<const double> q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double delta = p[i] - q[i];
    s += delta * delta;
  }
  return s;
}

double distance(std::span<const double> p, std::span<const double> q,
                Metric metric) {
  if (p.size() != q.size())
    throw std::invalid_argument("distance: dimension mismatch");
  switch (metric) {
    case Metric::kEuclidean:
      return std::sqrt(squared_euclidean(p, q));
    case Metric::kSquaredEuclidean:
      return squared_euclidean(p, q);
    case Metric::kManhattan: {
      double s = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
      return s;
    }
  }
  throw std::invalid_argument("distance: unknown metric");
}

DistanceMatrix::DistanceMatrix(int n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw std::invalid_argument("distance matrix: n must be >= 1");
  if (entries_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("distance matrix: bad entry count");
}

DistanceMatrix DistanceMatrix::compute(const Dataset& ds, Metric metric) {
  const int n = ds.size();
  std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
  // Each (i, j) entry is evaluated independently, so the parallel split over
  // rows is bitwise identical to the sequential pass.
  parallel_for(n, [&](int i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      entries[static_cast<std::size_t>(i) * n + j] =
          distance(ds.point(i), ds.point(j), metric);
    }
  });
  return DistanceMatrix(n, std::move(entries));
}

void validate(const Clustering& c) {
  bool any = false;
  for (int id : c.assignment) {
    if (id == kNoise) continue;
    any = true;
    if (id < 0 || id >= c.k)
      throw std::invalid_argument("clustering: cluster id out of range");
  }
  if (any && c.k < 1)
    throw std::invalid_argument("clustering: k must be >= 1");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 finalizer over a salted stream position
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::atomic<int> g_thread_budget{[] {
  const char* env = std::getenv("CLUSTER_LAB_THREADS");
  return env ? std::atoi(env) : 0;
}()};

}  // namespace

int thread_budget() { return g_thread_budget.load(); }

void set_thread_budget(int threads) { g_thread_budget.store(threads); }

void parallel_for(int n, const std::function<void(int)>& fn) {
  const int budget = thread_budget();
  const int workers = std::min(budget, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace clusterlab
