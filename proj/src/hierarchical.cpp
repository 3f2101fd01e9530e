#include "clusterlab/hierarchical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "clusterlab/io.hpp"

namespace clusterlab {

const char* linkage_name(Linkage linkage) {
  switch (linkage) {
    case Linkage::kSingle: return "single";
    case Linkage::kComplete: return "complete";
    case Linkage::kUpgma: return "upgma";
    case Linkage::kWard: return "ward";
  }
  return "?";
}

Linkage linkage_from_name(const std::string& name) {
  if (name == "single") return Linkage::kSingle;
  if (name == "complete") return Linkage::kComplete;
  if (name == "upgma") return Linkage::kUpgma;
  if (name == "ward") return Linkage::kWard;
  throw std::invalid_argument("unknown linkage: " + name);
}

double lance_williams_update(double d_ik, double d_jk, double d_ij, int n_i,
                             int n_j, int n_k, Linkage linkage) {
  if (!(d_ik >= 0) || !(d_jk >= 0) || !(d_ij >= 0) ||
      !std::isfinite(d_ik + d_jk + d_ij))
    throw std::invalid_argument("lance_williams_update: distances must be "
                                "nonnegative and finite");
  switch (linkage) {
    case Linkage::kSingle:
      return std::min(d_ik, d_jk);
    case Linkage::kComplete:
      return std::max(d_ik, d_jk);
    case Linkage::kUpgma: {
      if (n_i + n_j <= 0)
        throw std::invalid_argument("lance_williams_update: zero total size");
      const double total = n_i + n_j;
      return (n_i * d_ik + n_j * d_jk) / total;
    }
    case Linkage::kWard: {
      const double total = n_i + n_j + n_k;
      if (total <= 0)
        throw std::invalid_argument("lance_williams_update: zero total size");
      return ((n_i + n_k) * d_ik + (n_j + n_k) * d_jk - n_k * d_ij) / total;
    }
  }
  throw std::invalid_argument("lance_williams_update: unknown linkage");
}

double ess(const Dataset& ds, std::span<const int> members) {
  if (members.empty()) throw std::invalid_argument("ess: empty subset");
  const int d = ds.dim();
  std::vector<double> centroid(d, 0.0);
  for (int idx : members) {
    const auto p = ds.point(idx);
    for (int j = 0; j < d; ++j) centroid[j] += p[j];
  }
  for (int j = 0; j < d; ++j) centroid[j] /= static_cast<double>(members.size());
  double total = 0.0;
  for (int idx : members) {
    const auto p = ds.point(idx);
    for (int j = 0; j < d; ++j) {
      const double delta = p[j] - centroid[j];
      total += delta * delta;
    }
  }
  return total;
}

Dendrogram agglomerate(const Dataset& ds, Linkage linkage, Metric metric) {
  const int n = ds.size();
  if (n < 2) throw std::invalid_argument("agglomerate: need at least 2 points");
  if (linkage == Linkage::kWard && metric != Metric::kSquaredEuclidean)
    throw std::invalid_argument(
        "agglomerate: ward linkage requires squared Euclidean distances");

  // Active-slot table: slot s holds the current distance row of one live
  // cluster. Merging reuses the lower slot and retires the higher one.
  std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double d_ij = distance(ds.point(i), ds.point(j), metric);
      dist[static_cast<std::size_t>(i) * n + j] = d_ij;
      dist[static_cast<std::size_t>(j) * n + i] = d_ij;
    }

  // Live clusters stay densely packed in slots [0, live); merging frees one
  // slot and the last slot moves into it. Rows are contiguous, so the full
  // rescan below stays a straight min-scan.
  std::vector<int> node_id(n);  // current dendrogram node held by each slot
  std::vector<int> size(n, 1);
  std::iota(node_id.begin(), node_id.end(), 0);
  const std::size_t stride = n;

  Dendrogram out;
  out.n = n;
  out.merges.reserve(n - 1);

  int live = n;
  for (int step = 0; step < n - 1; ++step) {
    // Minimum inter-cluster distance; ties go to the lexicographically
    // smallest (min node id, max node id) pair.
    double best = std::numeric_limits<double>::infinity();
    int best_a = 0, best_b = 1;
    for (int a = 0; a < live - 1; ++a) {
      const double* row = dist.data() + a * stride;
      double row_min = std::numeric_limits<double>::infinity();
      for (int b = a + 1; b < live; ++b) row_min = std::min(row_min, row[b]);
      if (row_min > best) continue;
      for (int b = a + 1; b < live; ++b) {
        const double d_ab = row[b];
        if (d_ab > best) continue;
        if (d_ab < best) {
          best = d_ab;
          best_a = a;
          best_b = b;
          continue;
        }
        int lo = node_id[a], hi = node_id[b];
        if (lo > hi) std::swap(lo, hi);
        int cur_lo = node_id[best_a], cur_hi = node_id[best_b];
        if (cur_lo > cur_hi) std::swap(cur_lo, cur_hi);
        if (lo < cur_lo || (lo == cur_lo && hi < cur_hi)) {
          best_a = a;
          best_b = b;
        }
      }
    }

    const int ia = best_a, ib = best_b;
    const int n_i = size[ia], n_j = size[ib];
    const double d_ij = best;

    Merge m;
    m.left = std::min(node_id[ia], node_id[ib]);
    m.right = std::max(node_id[ia], node_id[ib]);
    // Ward maintains 2x the ESS increase on the squared-Euclidean table.
    m.height = linkage == Linkage::kWard ? d_ij / 2.0 : d_ij;
    m.size = n_i + n_j;
    out.merges.push_back(m);

    for (int s = 0; s < live; ++s) {
      if (s == ia || s == ib) continue;
      const double updated =
          lance_williams_update(dist[ia * stride + s], dist[ib * stride + s],
                                d_ij, n_i, n_j, size[s], linkage);
      dist[ia * stride + s] = updated;
      dist[s * stride + ia] = updated;
    }
    size[ia] = n_i + n_j;
    node_id[ia] = n + step;

    // swap-remove slot ib
    const int last = live - 1;
    if (ib != last) {
      for (int r = 0; r < live; ++r)
        dist[r * stride + ib] = dist[r * stride + last];
      std::copy_n(dist.data() + last * stride, live, dist.data() + ib * stride);
      dist[ib * stride + ib] = 0.0;
      node_id[ib] = node_id[last];
      size[ib] = size[last];
    }
    --live;
  }
  return out;
}

Clustering cut(const Dendrogram& dendrogram, int k) {
  const int n = dendrogram.n;
  if (k < 1 || k > n) throw std::invalid_argument("cut: k out of range");

  // Apply the first n-k merges with union-find over node ids.
  std::vector<int> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int t = 0; t < n - k; ++t) {
    const auto& m = dendrogram.merges[t];
    const int node = n + t;
    parent[find(m.left)] = node;
    parent[find(m.right)] = node;
  }

  Clustering out;
  out.assignment.assign(n, kNoise);
  out.k = k;
  std::vector<int> cluster_of_root(2 * n - 1, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (cluster_of_root[root] < 0) cluster_of_root[root] = next++;
    out.assignment[i] = cluster_of_root[root];
  }
  return out;
}

void write_dendrogram_csv(const Dendrogram& dendrogram, std::ostream& out) {
  out << "left,right,height,size\n";
  for (const auto& m : dendrogram.merges)
    out << m.left << "," << m.right << "," << format_double(m.height) << ","
        << m.size << "\n";
}

}  // namespace clusterlab
