#include "clusterlab/medoids.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace clusterlab {

namespace {

void check_medoids(const DistanceMatrix& dm, std::span<const int> medoids) {
  if (medoids.empty())
    throw std::invalid_argument("pam: medoid set must be nonempty");
  std::vector<int> sorted(medoids.begin(), medoids.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= dm.size())
    throw std::invalid_argument("pam: medoid index out of range");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("pam: medoid indices must be distinct");
}

/// First and second nearest-medoid distances for every object. For a medoid
/// the nearest is itself (distance 0) and the second nearest is the closest
/// other medoid.
void nearest_two(const DistanceMatrix& dm, std::span<const int> medoids,
                 std::vector<double>& first, std::vector<double>& second) {
  const int n = dm.size();
  first.assign(n, std::numeric_limits<double>::infinity());
  second.assign(n, std::numeric_limits<double>::infinity());
  for (int j = 0; j < n; ++j) {
    for (int m : medoids) {
      const double d = dm(j, m);
      if (d < first[j]) {
        second[j] = first[j];
        first[j] = d;
      } else if (d < second[j]) {
        second[j] = d;
      }
    }
  }
}

MedoidResult assemble(const DistanceMatrix& dm, std::vector<int> medoids) {
  const int n = dm.size();
  MedoidResult res;
  res.clustering.k = static_cast<int>(medoids.size());
  res.clustering.assignment.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int c = 0; c < static_cast<int>(medoids.size()); ++c) {
      const double d = dm(j, medoids[c]);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    res.clustering.assignment[j] = best;
    res.total_cost += best_d;
  }
  res.medoids = std::move(medoids);
  return res;
}

}  // namespace

std::vector<int> pam_build(const DistanceMatrix& dm, int k) {
  const int n = dm.size();
  if (k < 1 || k > n) throw std::invalid_argument("pam_build: k out of range");

  std::vector<int> medoids;
  medoids.reserve(k);
  std::vector<bool> selected(n, false);

  // Most central object first.
  int best = -1;
  double best_total = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    double total = 0.0;
    for (int j = 0; j < n; ++j) total += dm(i, j);
    if (total < best_total) {
      best_total = total;
      best = i;
    }
  }
  medoids.push_back(best);
  selected[best] = true;

  // nearest[j]: distance from j to its closest selected medoid.
  std::vector<double> nearest(n);
  for (int j = 0; j < n; ++j) nearest[j] = dm(j, best);

  while (static_cast<int>(medoids.size()) < k) {
    int winner = -1;
    double winner_gain = -1.0;
    for (int i = 0; i < n; ++i) {
      if (selected[i]) continue;
      double gain = 0.0;
      for (int j = 0; j < n; ++j) {
        if (selected[j] || j == i) continue;
        gain += std::max(nearest[j] - dm(i, j), 0.0);
      }
      if (gain > winner_gain) {
        winner_gain = gain;
        winner = i;
      }
    }
    medoids.push_back(winner);
    selected[winner] = true;
    for (int j = 0; j < n; ++j)
      nearest[j] = std::min(nearest[j], dm(j, winner));
  }
  return medoids;
}

double pam_swap_delta(const DistanceMatrix& dm, std::span<const int> medoids,
                      int i, int h) {
  std::vector<double> first, second;
  nearest_two(dm, medoids, first, second);
  const int n = dm.size();
  double delta = -first[h];
  for (int j = 0; j < n; ++j) {
    if (j == h) continue;
    const double d_ji = dm(j, i);
    const double d_jh = dm(j, h);
    if (d_ji == first[j]) {
      // j loses its closest medoid; it moves to h or its runner-up.
      delta += std::min(d_jh, second[j]) - first[j];
    } else {
      delta += std::min(d_jh - first[j], 0.0);
    }
  }
  return delta;
}

MedoidResult pam_swap(const DistanceMatrix& dm, std::vector<int> medoids) {
  check_medoids(dm, medoids);
  const int n = dm.size();
  const int k = static_cast<int>(medoids.size());
  std::vector<bool> selected(n, false);
  for (int m : medoids) selected[m] = true;

  std::vector<double> first, second;
  const int max_rounds = 100 + 20 * n;  // cost strictly decreases; safety cap
  for (int round = 0; round < max_rounds; ++round) {
    nearest_two(dm, medoids, first, second);

    double best_delta = 0.0;
    int best_slot = -1, best_i = -1, best_h = -1;
    for (int slot = 0; slot < k; ++slot) {
      const int i = medoids[slot];
      for (int h = 0; h < n; ++h) {
        if (selected[h]) continue;
        double delta = -first[h];
        for (int j = 0; j < n; ++j) {
          if (j == h) continue;
          const double d_ji = dm(j, i);
          const double d_jh = dm(j, h);
          if (d_ji == first[j])
            delta += std::min(d_jh, second[j]) - first[j];
          else
            delta += std::min(d_jh - first[j], 0.0);
        }
        const bool wins =
            delta < best_delta ||
            (delta == best_delta && best_slot >= 0 &&
             (i < best_i || (i == best_i && h < best_h)));
        if (wins && delta < 0.0) {
          best_delta = delta;
          best_slot = slot;
          best_i = i;
          best_h = h;
        }
      }
    }
    if (best_slot < 0) break;  // local optimum: every T_ih >= 0
    selected[best_i] = false;
    selected[best_h] = true;
    medoids[best_slot] = best_h;
  }
  return assemble(dm, std::move(medoids));
}

MedoidResult pam(const Dataset& ds, int k, Metric metric) {
  const auto dm = DistanceMatrix::compute(ds, metric);
  return pam_swap(dm, pam_build(dm, k));
}

MedoidResult clara(const Dataset& ds, const ClaraConfig& cfg, Metric metric) {
  const int n = ds.size();
  if (cfg.k < 1 || cfg.k > n) throw std::invalid_argument("clara: k out of range");
  if (cfg.num_samples < 1)
    throw std::invalid_argument("clara: num_samples must be >= 1");
  int sample_size = cfg.sample_size > 0 ? cfg.sample_size : 40 + 2 * cfg.k;
  if (sample_size < cfg.k)
    throw std::invalid_argument("clara: sample_size must be >= k");
  sample_size = std::min(sample_size, n);

  std::mt19937_64 rng(cfg.seed);
  std::vector<int> pool(n);

  std::vector<int> best_medoids;
  double best_cost = std::numeric_limits<double>::infinity();

  for (int s = 0; s < cfg.num_samples; ++s) {
    // Simple random sample without replacement, kept in index order.
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < sample_size; ++i) {
      const int pick = std::uniform_int_distribution<int>(i, n - 1)(rng);
      std::swap(pool[i], pool[pick]);
    }
    std::vector<int> sample(pool.begin(), pool.begin() + sample_size);
    std::sort(sample.begin(), sample.end());

    std::vector<double> sub(static_cast<std::size_t>(sample_size) * sample_size,
                            0.0);
    for (int a = 0; a < sample_size; ++a)
      for (int b = a + 1; b < sample_size; ++b) {
        const double d =
            distance(ds.point(sample[a]), ds.point(sample[b]), metric);
        sub[static_cast<std::size_t>(a) * sample_size + b] = d;
        sub[static_cast<std::size_t>(b) * sample_size + a] = d;
      }
    const DistanceMatrix sdm(sample_size, std::move(sub));
    const MedoidResult local = pam_swap(sdm, pam_build(sdm, cfg.k));

    std::vector<int> medoids(cfg.k);
    for (int c = 0; c < cfg.k; ++c) medoids[c] = sample[local.medoids[c]];

    double cost = 0.0;
    for (int j = 0; j < n; ++j) {
      double best = std::numeric_limits<double>::infinity();
      for (int m : medoids)
        best = std::min(best, distance(ds.point(j), ds.point(m), metric));
      cost += best;
    }
    if (cost < best_cost) {  // ties keep the earliest sample
      best_cost = cost;
      best_medoids = std::move(medoids);
    }
  }

  // Final assignment of every object to the winning medoid set.
  MedoidResult res;
  res.clustering.k = cfg.k;
  res.clustering.assignment.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int c = 0; c < cfg.k; ++c) {
      const double d = distance(ds.point(j), ds.point(best_medoids[c]), metric);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    res.clustering.assignment[j] = best;
    res.total_cost += best_d;
  }
  res.medoids = std::move(best_medoids);
  return res;
}

}  // namespace clusterlab
