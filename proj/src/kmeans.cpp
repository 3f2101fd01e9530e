#include "clusterlab/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "clusterlab/io.hpp"

namespace clusterlab {

const char* kmeans_init_name(KMeansInit init) {
  switch (init) {
    case KMeansInit::kForgy: return "forgy";
    case KMeansInit::kRandomPartition: return "random-partition";
    case KMeansInit::kPlusPlus: return "plusplus";
  }
  return "?";
}

KMeansInit kmeans_init_from_name(const std::string& name) {
  if (name == "forgy") return KMeansInit::kForgy;
  if (name == "random-partition") return KMeansInit::kRandomPartition;
  if (name == "plusplus" || name == "kmeans++") return KMeansInit::kPlusPlus;
  throw std::invalid_argument("unknown kmeans init: " + name);
}

double wcss_of(const Dataset& ds, const std::vector<double>& centers,
               const Clustering& clustering) {
  const int d = ds.dim();
  double total = 0.0;
  for (int i = 0; i < ds.size(); ++i) {
    const int c = clustering.assignment[i];
    total += squared_euclidean(
        ds.point(i), {centers.data() + static_cast<std::size_t>(c) * d,
                      static_cast<std::size_t>(d)});
  }
  return total;
}

int kmeanspp_next_center(const Dataset& ds, const std::vector<int>& chosen,
                         std::mt19937_64& rng) {
  const int n = ds.size();
  std::vector<double> weight(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int c : chosen)
      best = std::min(best, squared_euclidean(ds.point(i), ds.point(c)));
    weight[i] = best;
    total += best;
  }
  if (!(total > 0.0))
    throw std::invalid_argument(
        "kmeanspp: no point distinct from the chosen centers");
  const double u = std::uniform_real_distribution<double>(0.0, total)(rng);
  double acc = 0.0;
  int last_positive = -1;
  for (int i = 0; i < n; ++i) {
    if (weight[i] <= 0.0) continue;
    last_positive = i;
    acc += weight[i];
    if (u < acc) return i;
  }
  return last_positive;  // u landed on the rounding tail
}

std::vector<int> kmeanspp_seed(const Dataset& ds, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("kmeanspp_seed: k must be >= 1");
  if (k > ds.size())
    throw std::invalid_argument("kmeanspp_seed: k exceeds point count");
  std::mt19937_64 rng(seed);
  std::vector<int> chosen;
  chosen.reserve(k);
  chosen.push_back(
      std::uniform_int_distribution<int>(0, ds.size() - 1)(rng));
  while (static_cast<int>(chosen.size()) < k)
    chosen.push_back(kmeanspp_next_center(ds, chosen, rng));
  return chosen;
}

namespace {

/// Nearest-center assignment; ties broken by the lowest center index.
void assign_nearest(const Dataset& ds, const std::vector<double>& centers,
                    int k, std::vector<int>& assign) {
  const int d = ds.dim();
  parallel_for(ds.size(), [&](int i) {
    const auto p = ds.point(i);
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      const double dist = squared_euclidean(
          p, {centers.data() + static_cast<std::size_t>(c) * d,
              static_cast<std::size_t>(d)});
      if (dist < best_d) {
        best_d = dist;
        best = c;
      }
    }
    assign[i] = best;
  });
}

/// Keeps k clusters populated: every empty cluster is re-seeded with the
/// point currently farthest from its own center (never emptying another
/// cluster in the process).
void repair_empty_clusters(const Dataset& ds, std::vector<double>& centers,
                           int k, std::vector<int>& assign) {
  const int n = ds.size();
  const int d = ds.dim();
  std::vector<int> count(k, 0);
  for (int i = 0; i < n; ++i) ++count[assign[i]];
  for (int c = 0; c < k; ++c) {
    if (count[c] > 0) continue;
    int far = -1;
    double far_d = -1.0;
    for (int i = 0; i < n; ++i) {
      if (count[assign[i]] < 2) continue;
      const double dist = squared_euclidean(
          ds.point(i), {centers.data() + static_cast<std::size_t>(assign[i]) * d,
                        static_cast<std::size_t>(d)});
      if (dist > far_d) {
        far_d = dist;
        far = i;
      }
    }
    if (far < 0) continue;  // fewer populated points than clusters
    --count[assign[far]];
    assign[far] = c;
    count[c] = 1;
    std::copy_n(ds.point(far).data(), d,
                centers.begin() + static_cast<std::size_t>(c) * d);
  }
}

/// Cluster means; fixed summation order keeps runs reproducible.
void update_centers(const Dataset& ds, const std::vector<int>& assign, int k,
                    std::vector<double>& centers) {
  const int d = ds.dim();
  std::vector<int> count(k, 0);
  std::fill(centers.begin(), centers.end(), 0.0);
  for (int i = 0; i < ds.size(); ++i) {
    const int c = assign[i];
    ++count[c];
    const auto p = ds.point(i);
    for (int j = 0; j < d; ++j)
      centers[static_cast<std::size_t>(c) * d + j] += p[j];
  }
  for (int c = 0; c < k; ++c)
    for (int j = 0; j < d; ++j)
      if (count[c] > 0)
        centers[static_cast<std::size_t>(c) * d + j] /= count[c];
}

}  // namespace

KMeansResult lloyd(const Dataset& ds, std::vector<double> centers,
                   int max_iter, double tol) {
  const int d = ds.dim();
  if (centers.empty() || centers.size() % static_cast<std::size_t>(d) != 0)
    throw std::invalid_argument("lloyd: centers must be k x d");
  if (max_iter < 1) throw std::invalid_argument("lloyd: max_iter must be >= 1");
  const int k = static_cast<int>(centers.size()) / d;
  const int n = ds.size();

  KMeansResult res;
  res.clustering.k = k;
  std::vector<int> assign(n, -1);
  std::vector<int> next(n, -1);
  double prev_wcss = 0.0;
  bool stable = false;

  for (int iter = 1; iter <= max_iter; ++iter) {
    assign_nearest(ds, centers, k, next);
    repair_empty_clusters(ds, centers, k, next);
    const bool changed = iter == 1 || next != assign;
    assign = next;
    update_centers(ds, assign, k, centers);
    const double w =
        wcss_of(ds, centers, Clustering{assign, k});
    res.wcss_trace.push_back(w);
    res.iterations = iter;
    if (!changed) {
      stable = true;
      break;
    }
    if (iter >= 2 && prev_wcss - w <= tol * prev_wcss) break;
    prev_wcss = w;
  }

  if (!stable) {
    // Align the assignment with the final centers so the returned pair is
    // consistent even when the loop stopped on the tolerance test.
    assign_nearest(ds, centers, k, next);
    if (next != assign) {
      assign = next;
      res.wcss_trace.push_back(wcss_of(ds, centers, Clustering{assign, k}));
    }
  }

  res.centers = std::move(centers);
  res.clustering.assignment = std::move(assign);
  res.wcss = res.wcss_trace.back();
  return res;
}

KMeansResult kmeans(const Dataset& ds, const KMeansConfig& cfg) {
  const int n = ds.size();
  const int d = ds.dim();
  if (cfg.k < 1) throw std::invalid_argument("kmeans: k must be >= 1");
  if (cfg.k > n) throw std::invalid_argument("kmeans: k exceeds point count");
  if (cfg.max_iter < 1)
    throw std::invalid_argument("kmeans: max_iter must be >= 1");

  std::vector<double> centers(static_cast<std::size_t>(cfg.k) * d, 0.0);
  std::mt19937_64 rng(cfg.seed);
  switch (cfg.init) {
    case KMeansInit::kForgy: {
      // k distinct points, uniform without replacement.
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      for (int c = 0; c < cfg.k; ++c) {
        const int pick =
            std::uniform_int_distribution<int>(c, n - 1)(rng);
        std::swap(idx[c], idx[pick]);
        std::copy_n(ds.point(idx[c]).data(), d,
                    centers.begin() + static_cast<std::size_t>(c) * d);
      }
      break;
    }
    case KMeansInit::kRandomPartition: {
      std::vector<int> assign(n);
      std::uniform_int_distribution<int> pick(0, cfg.k - 1);
      for (int i = 0; i < n; ++i) assign[i] = pick(rng);
      update_centers(ds, assign, cfg.k, centers);
      repair_empty_clusters(ds, centers, cfg.k, assign);
      update_centers(ds, assign, cfg.k, centers);
      break;
    }
    case KMeansInit::kPlusPlus: {
      const auto seeds = kmeanspp_seed(ds, cfg.k, cfg.seed);
      for (int c = 0; c < cfg.k; ++c)
        std::copy_n(ds.point(seeds[c]).data(), d,
                    centers.begin() + static_cast<std::size_t>(c) * d);
      break;
    }
  }
  return lloyd(ds, std::move(centers), cfg.max_iter, cfg.tol);
}

std::vector<WcssPoint> wcss_curve(const Dataset& ds, int k_min, int k_max,
                                  const KMeansConfig& base, int restarts) {
  if (k_min < 1 || k_max < k_min || k_max > ds.size())
    throw std::invalid_argument("wcss_curve: bad k range");
  if (restarts < 1)
    throw std::invalid_argument("wcss_curve: restarts must be >= 1");
  std::vector<WcssPoint> curve;
  curve.reserve(k_max - k_min + 1);
  for (int k = k_min; k <= k_max; ++k) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
      KMeansConfig cfg = base;
      cfg.k = k;
      cfg.seed = mix_seed(base.seed, static_cast<std::uint64_t>(k) * 10007 + r);
      best = std::min(best, kmeans(ds, cfg).wcss);
    }
    curve.push_back({k, best});
  }
  return curve;
}

void write_wcss_csv(const std::vector<WcssPoint>& curve, std::ostream& out) {
  out << "k,wcss\n";
  for (const auto& p : curve)
    out << p.k << "," << format_double(p.wcss) << "\n";
}

}  // namespace clusterlab
