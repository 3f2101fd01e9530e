#include "clusterlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

#include "clusterlab/io.hpp"

namespace clusterlab {

namespace {

void check_dbscan_config(const DbscanConfig& cfg) {
  if (!(cfg.eps > 0.0) || !std::isfinite(cfg.eps))
    throw std::invalid_argument("dbscan: eps must be positive and finite");
  if (cfg.min_pts < 1)
    throw std::invalid_argument("dbscan: min_pts must be >= 1");
}

/// Indices within the closed eps-ball around p, the point itself included.
std::vector<int> neighbors_of(const Dataset& ds, int p, double eps,
                              Metric metric) {
  std::vector<int> out;
  for (int j = 0; j < ds.size(); ++j)
    if (distance(ds.point(p), ds.point(j), metric) <= eps) out.push_back(j);
  return out;
}

}  // namespace

Clustering dbscan(const Dataset& ds, const DbscanConfig& cfg, Metric metric) {
  check_dbscan_config(cfg);
  const int n = ds.size();
  constexpr int kUnvisited = -2;
  std::vector<int> label(n, kUnvisited);

  int cid = 0;
  std::vector<int> stack;
  for (int p = 0; p < n; ++p) {
    if (label[p] != kUnvisited) continue;
    auto nb = neighbors_of(ds, p, cfg.eps, metric);
    if (static_cast<int>(nb.size()) < cfg.min_pts) {
      label[p] = kNoise;  // may later be claimed as a border point
      continue;
    }
    label[p] = cid;
    stack.assign(nb.begin(), nb.end());
    while (!stack.empty()) {
      const int q = stack.back();
      stack.pop_back();
      if (label[q] == kNoise) label[q] = cid;  // border point
      if (label[q] != kUnvisited) continue;
      label[q] = cid;
      auto qn = neighbors_of(ds, q, cfg.eps, metric);
      if (static_cast<int>(qn.size()) >= cfg.min_pts)
        stack.insert(stack.end(), qn.begin(), qn.end());
    }
    ++cid;
  }

  Clustering out;
  out.assignment = std::move(label);
  out.k = cid;
  return out;
}

std::vector<double> kdist_curve(const Dataset& ds, int k, Metric metric) {
  const int n = ds.size();
  if (k < 1 || k >= n)
    throw std::invalid_argument("kdist_curve: need 1 <= k < n");
  std::vector<double> out(n);
  std::vector<double> dists(n - 1);
  for (int i = 0; i < n; ++i) {
    int m = 0;
    for (int j = 0; j < n; ++j)
      if (j != i) dists[m++] = distance(ds.point(i), ds.point(j), metric);
    std::nth_element(dists.begin(), dists.begin() + (k - 1), dists.end());
    out[i] = dists[k - 1];
  }
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

OpticsOrdering optics(const Dataset& ds, int min_pts, double eps,
                      Metric metric) {
  if (min_pts < 1) throw std::invalid_argument("optics: min_pts must be >= 1");
  if (!(eps > 0.0)) throw std::invalid_argument("optics: eps must be positive");
  const int n = ds.size();

  OpticsOrdering ord;
  ord.eps = eps;
  ord.min_pts = min_pts;
  ord.records.reserve(n);

  std::vector<bool> processed(n, false);
  std::vector<double> reach(n, kUndefinedDistance);
  std::vector<double> dist_buf(n);

  // Core distance: min_pts-th smallest distance from p, counting p itself,
  // provided the eps-neighborhood is large enough.
  const auto core_distance = [&](int p, const std::vector<int>& nb) {
    if (static_cast<int>(nb.size()) < min_pts) return kUndefinedDistance;
    int m = 0;
    for (int j : nb) dist_buf[m++] = distance(ds.point(p), ds.point(j), metric);
    std::nth_element(dist_buf.begin(), dist_buf.begin() + (min_pts - 1),
                     dist_buf.begin() + m);
    return dist_buf[min_pts - 1];
  };

  // Seed list keyed by (reachability, index): pops are deterministic.
  std::set<std::pair<double, int>> seeds;

  const auto process = [&](int p) {
    processed[p] = true;
    const auto nb = neighbors_of(ds, p, eps, metric);
    const double core = core_distance(p, nb);
    ord.records.push_back({p, reach[p], core});
    if (core == kUndefinedDistance) return;
    for (int q : nb) {
      if (processed[q]) continue;
      const double r = std::max(core, distance(ds.point(p), ds.point(q), metric));
      if (r < reach[q]) {  // covers the undefined (infinite) case
        if (reach[q] != kUndefinedDistance) seeds.erase({reach[q], q});
        reach[q] = r;
        seeds.insert({r, q});
      }
    }
  };

  for (int p0 = 0; p0 < n; ++p0) {
    if (processed[p0]) continue;
    process(p0);
    while (!seeds.empty()) {
      const int q = seeds.begin()->second;
      seeds.erase(seeds.begin());
      process(q);
    }
  }
  return ord;
}

Clustering extract_clusters(const OpticsOrdering& ordering, double threshold) {
  if (!(threshold > 0.0))
    throw std::invalid_argument("extract_clusters: threshold must be positive");
  const int n = static_cast<int>(ordering.records.size());
  Clustering out;
  out.assignment.assign(n, kNoise);
  int current = -1;
  for (const auto& rec : ordering.records) {
    if (rec.reachability != kUndefinedDistance &&
        rec.reachability <= threshold) {
      if (current < 0) current = out.k++;  // unreachable in a valid ordering
      out.assignment[rec.point] = current;
    } else if (rec.core_distance <= threshold) {
      current = out.k++;
      out.assignment[rec.point] = current;
    } else {
      // stays noise; do not extend the current cluster across the gap
    }
  }
  return out;
}

void write_reachability_csv(const OpticsOrdering& ordering, std::ostream& out) {
  out << "order,point,reachability,core_distance\n";
  for (std::size_t i = 0; i < ordering.records.size(); ++i) {
    const auto& rec = ordering.records[i];
    out << i << "," << rec.point << "," << format_double(rec.reachability)
        << "," << format_double(rec.core_distance) << "\n";
  }
}

void write_kdist_csv(const std::vector<double>& kdist, std::ostream& out) {
  out << "rank,kdist\n";
  for (std::size_t i = 0; i < kdist.size(); ++i)
    out << i << "," << format_double(kdist[i]) << "\n";
}

}  // namespace clusterlab
