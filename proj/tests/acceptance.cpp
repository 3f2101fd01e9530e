// Acceptance suite: one numbered check per criterion, one PASS/FAIL line
// each, nonzero exit if any fail. An optional argv[1] runs a single
// criterion. Criterion 11 invokes the CLI named by CLUSTER_LAB_CLI.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clusterlab/core.hpp"
#include "clusterlab/density.hpp"
#include "clusterlab/evalgen.hpp"
#include "clusterlab/hierarchical.hpp"
#include "clusterlab/io.hpp"
#include "clusterlab/kmeans.hpp"
#include "clusterlab/medoids.hpp"
#include "clusterlab/mixture.hpp"
#include "clusterlab/presets.hpp"

using namespace clusterlab;

namespace {

constexpr std::uint64_t kBenchSeed = 117;

struct Criterion {
  int id;
  const char* what;
  std::function<bool(std::string&)> run;
};

Dataset random_dataset(int n, int d, std::mt19937_64& rng, double spread) {
  std::uniform_real_distribution<double> u(0.0, spread);
  std::vector<double> coords(static_cast<std::size_t>(n) * d);
  for (auto& v : coords) v = u(rng);
  return Dataset(std::move(coords), d);
}

// ---------------------------------------------------------------------------
// 1. hierarchical recurrence vs definitional linkage distances

double linkage_def(const Dataset& ds, const std::vector<int>& a,
                   const std::vector<int>& b, Linkage lk) {
  double best = lk == Linkage::kSingle
                    ? std::numeric_limits<double>::infinity()
                    : 0.0;
  double sum = 0.0;
  for (int i : a)
    for (int j : b) {
      const double d = distance(ds.point(i), ds.point(j), Metric::kEuclidean);
      sum += d;
      best = lk == Linkage::kSingle ? std::min(best, d) : std::max(best, d);
    }
  if (lk == Linkage::kUpgma) return sum / (double(a.size()) * b.size());
  return best;
}

bool criterion_hierarchical(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240901);
  double worst_abs = 0.0, worst_rel = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + int(rng() % 37);  // up to 40
    const auto ds = random_dataset(n, 2, rng, 10.0);
    for (const Linkage lk : {Linkage::kSingle, Linkage::kComplete,
                             Linkage::kUpgma, Linkage::kWard}) {
      const Metric metric = lk == Linkage::kWard ? Metric::kSquaredEuclidean
                                                 : Metric::kEuclidean;
      const auto tree = agglomerate(ds, lk, metric);
      std::vector<std::vector<int>> members(2 * n - 1);
      for (int i = 0; i < n; ++i) members[i] = {i};
      for (int t = 0; t < n - 1; ++t) {
        const auto& m = tree.merges[t];
        const auto& a = members[m.left];
        const auto& b = members[m.right];
        if (lk == Linkage::kWard) {
          std::vector<int> both = a;
          both.insert(both.end(), b.begin(), b.end());
          const double want = ess(ds, both) - ess(ds, a) - ess(ds, b);
          const double rel = std::abs(m.height - want) /
                             std::max(std::abs(want), 1e-300);
          worst_rel = std::max(worst_rel, rel);
          if (rel > 1e-9) return false;
        } else {
          const double want = linkage_def(ds, a, b, lk);
          worst_abs = std::max(worst_abs, std::abs(m.height - want));
          if (std::abs(m.height - want) > 1e-9) return false;
        }
        auto merged = a;
        merged.insert(merged.end(), b.begin(), b.end());
        members[n + t] = std::move(merged);
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "worst |err| %.2e abs / %.2e rel over 100 datasets, %.1f s",
                worst_abs, worst_rel, secs);
  note = buf;
  return secs < 10.0;
}

// ---------------------------------------------------------------------------
// 2. k-means: monotone traces, the rectangle scenario, seeding escape rate

bool criterion_kmeans(std::string& note) {
  for (int preset = 1; preset <= 3; ++preset) {
    const auto ds = generate(presets::dataset(preset, 1000, kBenchSeed));
    for (int seed = 0; seed < 50; ++seed) {
      KMeansConfig cfg;
      cfg.k = presets::num_classes(preset);
      cfg.seed = seed;
      cfg.init = seed % 2 ? KMeansInit::kRandomPartition : KMeansInit::kForgy;
      const auto res = kmeans(ds, cfg);
      for (std::size_t t = 1; t < res.wcss_trace.size(); ++t)
        if (res.wcss_trace[t] > res.wcss_trace[t - 1] + 1e-9) return false;
    }
  }

  const Dataset rect({0.0, 0.0, 10.0, 0.0, 0.0, 1.0, 10.0, 1.0}, 2);
  const auto trapped = lloyd(rect, {5.0, 0.0, 5.0, 1.0});
  const auto optimal = lloyd(rect, {0.0, 0.5, 10.0, 0.5});
  if (std::abs(trapped.wcss - 100.0) > 1e-9) return false;
  if (std::abs(optimal.wcss - 1.0) > 1e-9) return false;

  int escaped = 0;
  for (int seed = 0; seed < 100; ++seed) {
    KMeansConfig cfg;
    cfg.k = 2;
    cfg.seed = seed;
    cfg.init = KMeansInit::kPlusPlus;
    if (std::abs(kmeans(rect, cfg).wcss - 1.0) < 1e-9) ++escaped;
  }
  char buf[120];
  std::snprintf(buf, sizeof(buf),
                "rectangle 100 vs 1 reproduced; seeding escaped %d/100", escaped);
  note = buf;
  return escaped >= 90;
}

// ---------------------------------------------------------------------------
// 3. seeding distribution on a fixed 4-point instance

bool criterion_seeding(std::string& note) {
  const Dataset square({0.0, 0.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0}, 2);
  // second-center law given a first center: nearest two sides 1/4 each,
  // the diagonal 1/2
  std::map<std::pair<int, int>, int> counts;
  std::vector<int> first_count(4, 0);
  for (int seed = 0; seed < 100000; ++seed) {
    const auto picked = kmeanspp_seed(square, 2, seed);
    ++first_count[picked[0]];
    ++counts[{picked[0], picked[1]}];
  }
  double worst = 0.0;
  for (int f = 0; f < 4; ++f) {
    for (int s = 0; s < 4; ++s) {
      if (s == f) continue;
      const double d2 = squared_euclidean(square.point(f), square.point(s));
      const double want = d2 / 4.0;  // total D^2 mass is 1+1+2
      const double got = double(counts[{f, s}]) / first_count[f];
      worst = std::max(worst, std::abs(got - want));
    }
  }
  char buf[100];
  std::snprintf(buf, sizeof(buf), "worst conditional deviation %.4f", worst);
  note = buf;
  return worst <= 0.01;
}

// ---------------------------------------------------------------------------
// 4. PAM swap-neighborhood local optimality

bool criterion_pam(std::string& note) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + int(rng() % 7);  // up to 10
    const auto ds = random_dataset(n, 2, rng, 8.0);
    const auto dm = DistanceMatrix::compute(ds, Metric::kEuclidean);
    const auto res = pam_swap(dm, pam_build(dm, 2));
    const auto cost_of = [&](const std::vector<int>& medoids) {
      double cost = 0.0;
      for (int j = 0; j < n; ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (int m : medoids) best = std::min(best, dm(j, m));
        cost += best;
      }
      return cost;
    };
    const double cost = cost_of(res.medoids);
    if (std::abs(cost - res.total_cost) > 1e-9 * std::max(cost, 1.0))
      return false;
    for (int slot = 0; slot < 2; ++slot)
      for (int h = 0; h < n; ++h) {
        if (h == res.medoids[0] || h == res.medoids[1]) continue;
        if (pam_swap_delta(dm, res.medoids, res.medoids[slot], h) < -1e-9)
          return false;
        auto neighbor = res.medoids;
        neighbor[slot] = h;
        if (cost_of(neighbor) < cost - 1e-9) return false;
      }
  }
  note = "200 instances locally optimal";
  return true;
}

// ---------------------------------------------------------------------------
// 5. CLARA degenerates to PAM when the sample is the dataset

bool criterion_clara(std::string& note) {
  std::mt19937_64 rng(55055);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 8 + int(rng() % 23);
    const auto ds = random_dataset(n, 2, rng, 10.0);
    ClaraConfig cfg;
    cfg.k = 1 + trial % 4;
    cfg.num_samples = 1;
    cfg.sample_size = n + int(rng() % 10);
    cfg.seed = trial;
    const auto via_clara = clara(ds, cfg);
    const auto via_pam = pam(ds, cfg.k);
    if (via_clara.medoids != via_pam.medoids) return false;
    if (via_clara.total_cost != via_pam.total_cost) return false;
    if (via_clara.clustering.assignment != via_pam.clustering.assignment)
      return false;
  }
  note = "20 instances identical (medoids, cost, assignment)";
  return true;
}

// ---------------------------------------------------------------------------
// 6. DBSCAN equals the reachability-closure oracle

bool criterion_dbscan(std::string& note) {
  std::mt19937_64 rng(606060);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 20 + int(rng() % 181);  // up to 200
    const auto ds = random_dataset(n, 2, rng, 6.0);
    const double eps = 0.35 + 0.15 * (trial % 6);
    const int min_pts = 2 + trial % 4;
    const auto got = dbscan(ds, {eps, min_pts});

    std::vector<bool> core(n, false);
    for (int i = 0; i < n; ++i) {
      int cnt = 0;
      for (int j = 0; j < n; ++j)
        if (distance(ds.point(i), ds.point(j), Metric::kEuclidean) <= eps)
          ++cnt;
      core[i] = cnt >= min_pts;
    }
    std::vector<int> comp(n, -1);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (!core[i] || comp[i] >= 0) continue;
      std::vector<int> stack{i};
      comp[i] = c;
      while (!stack.empty()) {
        const int p = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j)
          if (core[j] && comp[j] < 0 &&
              distance(ds.point(p), ds.point(j), Metric::kEuclidean) <= eps) {
            comp[j] = c;
            stack.push_back(j);
          }
      }
      ++c;
    }
    for (int i = 0; i < n; ++i) {
      if (!core[i]) {
        bool reachable = false;
        for (int j = 0; j < n && !reachable; ++j)
          reachable =
              core[j] &&
              distance(ds.point(i), ds.point(j), Metric::kEuclidean) <= eps;
        if (reachable == (got.assignment[i] == kNoise)) return false;
        continue;
      }
      for (int j = i + 1; j < n; ++j) {
        if (!core[j]) continue;
        if ((comp[i] == comp[j]) !=
            (got.assignment[i] == got.assignment[j]))
          return false;
      }
      if (got.assignment[i] == kNoise) return false;
    }
  }
  note = "50 instances: core partition and noise set match";
  return true;
}

// ---------------------------------------------------------------------------
// 7. OPTICS extraction vs DBSCAN on core points

bool criterion_optics(std::string& note) {
  std::mt19937_64 rng(70707);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 30 + int(rng() % 120);
    const auto ds = random_dataset(n, 2, rng, 6.0);
    const int min_pts = 2 + trial % 4;
    const double t = 0.4 + 0.15 * (trial % 5);
    const auto ord = optics(ds, min_pts);
    const auto via_optics = extract_clusters(ord, t);
    const auto via_dbscan = dbscan(ds, {t, min_pts});
    for (int i = 0; i < n; ++i) {
      int cnt_i = 0;
      for (int j = 0; j < n; ++j)
        if (distance(ds.point(i), ds.point(j), Metric::kEuclidean) <= t)
          ++cnt_i;
      if (cnt_i < min_pts) continue;  // not core at radius t
      for (int j = i + 1; j < n; ++j) {
        int cnt_j = 0;
        for (int m = 0; m < n; ++m)
          if (distance(ds.point(j), ds.point(m), Metric::kEuclidean) <= t)
            ++cnt_j;
        if (cnt_j < min_pts) continue;
        if ((via_optics.assignment[i] == via_optics.assignment[j]) !=
            (via_dbscan.assignment[i] == via_dbscan.assignment[j]))
          return false;
      }
    }
  }
  note = "20 instances consistent on core points";
  return true;
}

// ---------------------------------------------------------------------------
// 8. GMM: EM guarantees, stationarity, recovery and selection of k = 3

double q_function(const Dataset& ds, const Responsibilities& resp,
                  const MixtureParams& params) {
  double q = 0.0;
  for (int i = 0; i < ds.size(); ++i)
    for (int l = 0; l < params.k; ++l) {
      const double t = resp(i, l);
      if (t == 0.0) continue;
      q += t * (std::log(params.weights[l]) +
                log_gaussian_pdf(ds.point(i), params.mean(l), params.cov(l)));
    }
  return q;
}

bool criterion_gmm(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();

  DatasetSpec spec;
  spec.classes = std::vector<GaussClass>{
      {0.0, 0.0, 1.0, 1.0}, {8.0, 0.0, 1.0, 1.0}, {0.0, 8.0, 1.0, 1.0}};
  spec.n = 600;

  // stationarity of the M-step output, ridge disabled
  {
    std::mt19937_64 rng(80808);
    const auto ds = random_dataset(60, 2, rng, 4.0);
    MixtureParams p0;
    p0.k = 2;
    p0.d = 2;
    p0.cov_type = CovType::kFull;
    p0.weights = {0.5, 0.5};
    p0.means = {1.0, 1.0, 3.0, 3.0};
    p0.covs = {1, 0, 0, 1, 1, 0, 0, 1};
    const auto resp = e_step(ds, p0);
    const auto fitted = m_step(ds, resp, CovType::kFull, 0.0);
    const double h = 1e-4;
    for (int l = 0; l < 2; ++l) {
      for (int j = 0; j < 2; ++j) {
        auto up = fitted, dn = fitted;
        up.means[2 * l + j] += h;
        dn.means[2 * l + j] -= h;
        if (std::abs(q_function(ds, resp, up) - q_function(ds, resp, dn)) /
                (2 * h) > 1e-6)
          return false;
      }
      for (int a = 0; a < 2; ++a)
        for (int b = a; b < 2; ++b) {
          auto up = fitted, dn = fitted;
          up.covs[4 * l + 2 * a + b] += h;
          up.covs[4 * l + 2 * b + a] = up.covs[4 * l + 2 * a + b];
          dn.covs[4 * l + 2 * a + b] -= h;
          dn.covs[4 * l + 2 * b + a] = dn.covs[4 * l + 2 * a + b];
          if (std::abs(q_function(ds, resp, up) - q_function(ds, resp, dn)) /
                  (2 * h) > 1e-6)
            return false;
        }
    }
  }

  int select3 = 0;
  int acc_good = 0;
  double fixed_acc = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    spec.seed = 9000 + seed;
    const auto ds = generate(spec);
    const auto fit = fit_gmm(ds, 3, CovType::kFull, seed);
    for (std::size_t t = 1; t < fit.ll_trace.size(); ++t)
      if (fit.ll_trace[t] < fit.ll_trace[t - 1] - 1e-8) return false;
    for (int i = 0; i < ds.size(); ++i) {
      double row = 0.0;
      for (int l = 0; l < 3; ++l) row += fit.responsibilities(i, l);
      if (std::abs(row - 1.0) > 1e-12) return false;
    }
    double wsum = 0.0;
    for (double w : fit.params.weights) wsum += w;
    if (std::abs(wsum - 1.0) > 1e-12) return false;
    const double acc = accuracy(fit.clustering, ds.labels());
    if (acc >= 0.99) ++acc_good;
    if (seed == 0) fixed_acc = acc;

    const auto scan = bic_scan(ds, 1, 8, {CovType::kDiagonal}, seed);
    for (const auto& cell : scan.cells)
      if (cell.failed) return false;
    if (scan.cells[scan.best_index].k == 3) ++select3;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  char buf[160];
  std::snprintf(
      buf, sizeof(buf),
      "fixed-instance accuracy %.4f (>=0.99 on %d/100 seeds), k=3 "
      "selected %d/100, %.1f s",
      fixed_acc, acc_good, select3, secs);
  note = buf;
  return fixed_acc >= 0.99 && select3 >= 95 && secs < 60.0;
}

// ---------------------------------------------------------------------------
// 9. accuracy bands of the three benchmark presets

bool criterion_bands(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();

  // preset 2: the partition-recovering methods
  {
    const auto ds = generate(presets::dataset(2, 1000, kBenchSeed));
    if (accuracy(pam(ds, 5).clustering, ds.labels()) < 0.98) return false;
    ClaraConfig cc;
    cc.k = 5;
    cc.num_samples = 50;
    cc.sample_size = 50;
    cc.seed = kBenchSeed;
    if (accuracy(clara(ds, cc).clustering, ds.labels()) < 0.98) return false;
    if (accuracy(cut(agglomerate(ds, Linkage::kUpgma, Metric::kEuclidean), 5),
                 ds.labels()) < 0.98)
      return false;
    if (accuracy(fit_gmm(ds, 5, CovType::kDiagonal, kBenchSeed).clustering,
                 ds.labels()) < 0.98)
      return false;
  }

  // preset 1: initialization sensitivity of the naive runs
  int forgy_below = 0, pp_above = 0;
  {
    const auto ds = generate(presets::dataset(1, 1000, kBenchSeed));
    for (int seed = 0; seed < 100; ++seed) {
      KMeansConfig cfg;
      cfg.k = 4;
      cfg.seed = seed;
      cfg.init = KMeansInit::kForgy;
      if (accuracy(kmeans(ds, cfg).clustering, ds.labels()) < 0.9)
        ++forgy_below;
      cfg.init = KMeansInit::kPlusPlus;
      if (accuracy(kmeans(ds, cfg).clustering, ds.labels()) >= 0.95)
        ++pp_above;
    }
    if (forgy_below < 5 || pp_above < 80) return false;
  }

  // every preset: DBSCAN at the published parameter pairs
  double dbscan_min = 1.0;
  for (int preset = 1; preset <= 3; ++preset) {
    const auto ds = generate(presets::dataset(preset, 1000, kBenchSeed));
    for (const auto& row : presets::dbscan_rows(preset)) {
      const double acc =
          accuracy(dbscan(ds, {row.eps, row.min_pts}), ds.labels());
      dbscan_min = std::min(dbscan_min, acc);
      if (acc < 0.90) return false;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  char buf[160];
  std::snprintf(
      buf, sizeof(buf),
      "forgy<0.9 in %d/100, ++>=0.95 in %d/100, dbscan min %.3f, %.0f s",
      forgy_below, pp_above, dbscan_min, secs);
  note = buf;
  return secs < 300.0;
}

// ---------------------------------------------------------------------------
// 10. runtime ordering of the suite

bool criterion_runtime(std::string& note) {
  std::string detail;
  bool ok = true;
  for (int preset = 1; preset <= 3; ++preset) {
    const auto ds = generate(presets::dataset(preset, 1000, kBenchSeed));
    const auto records = benchmark(ds, presets::suite(preset, kBenchSeed), 5);
    int kmeans_row = -1, gmm_row = -1;
    for (int i = 0; i < int(records.size()); ++i) {
      if (!records[i].ok) return false;
      if (records[i].algorithm == "k-means") kmeans_row = i;
      if (records[i].algorithm == "GMM") gmm_row = i;
    }
    for (int i = 0; i < int(records.size()); ++i) {
      if (i != kmeans_row &&
          records[i].runtime_ms <= records[kmeans_row].runtime_ms)
        ok = false;
      if (i != gmm_row && records[i].runtime_ms >= records[gmm_row].runtime_ms)
        ok = false;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), " p%d[kmeans %.3g ms, ++ %.3g ms, gmm %.4g ms]",
                  preset, records[kmeans_row].runtime_ms,
                  records[2].runtime_ms, records[gmm_row].runtime_ms);
    detail += buf;
  }
  note = "medians of 5:" + detail;
  return ok;
}

// ---------------------------------------------------------------------------
// 11. CLI determinism

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Drops the runtime_ms column of a bench CSV (the one timing field).
std::string strip_runtime(const std::string& csv) {
  std::stringstream in(csv), out;
  std::string line;
  while (std::getline(in, line)) {
    // runtime_ms is the second-to-last comma-separated field
    const auto last = line.rfind(',');
    if (last == std::string::npos) {
      out << line << "\n";
      continue;
    }
    const auto prev = line.rfind(',', last - 1);
    out << line.substr(0, prev) << line.substr(last) << "\n";
  }
  return out.str();
}

bool criterion_determinism(std::string& note) {
  const char* cli = std::getenv("CLUSTER_LAB_CLI");
  if (!cli) {
    note = "CLUSTER_LAB_CLI not set";
    return false;
  }
  const std::string bin = cli;
  const auto run = [&](const std::string& args) {
    const std::string cmd = bin + " " + args + " > acc_stdout.tmp 2>/dev/null";
    return std::system(cmd.c_str()) == 0;
  };

  if (!run("gen --preset mixed4 --n 400 --seed 5 --out acc_a.csv")) return false;
  if (!run("gen --preset mixed4 --n 400 --seed 5 --out acc_b.csv")) return false;
  if (slurp("acc_a.csv") != slurp("acc_b.csv")) return false;

  const std::vector<std::string> cluster_cmds = {
      "cluster --algo kmeans --k 4 --seed 3 acc_a.csv --out",
      "cluster --algo kmeans++ --k 4 --seed 3 acc_a.csv --out",
      "cluster --algo pam --k 4 acc_a.csv --out",
      "cluster --algo clara --k 4 --seed 3 acc_a.csv --out",
      "cluster --algo hierarchical --linkage ward --k 4 acc_a.csv --out",
      "cluster --algo dbscan --eps 2 --min-pts 3 acc_a.csv --out",
      "cluster --algo optics --min-pts 5 --threshold 4 acc_a.csv --out",
      "cluster --algo gmm --k 4 --seed 3 acc_a.csv --out",
      "curves --kind wcss --k-max 6 --seed 3 acc_a.csv --out",
      "curves --kind kdist --k 4 acc_a.csv --out",
      "curves --kind reachability --min-pts 5 acc_a.csv --out",
      "curves --kind bic --k-max 3 --seed 3 acc_a.csv --out",
      "curves --kind dendrogram --linkage upgma acc_a.csv --out",
  };
  for (const auto& cmd : cluster_cmds) {
    if (!run(cmd + " acc_a.out")) return false;
    if (!run(cmd + " acc_b.out")) return false;
    if (slurp("acc_a.out") != slurp("acc_b.out")) {
      note = "mismatch: " + cmd;
      return false;
    }
  }

  // bench: byte-identical after dropping the timing column
  const std::string bench =
      "bench --preset 3 --n 300 --seed 5 --repeats 1 --out";
  if (!run(bench + " acc_bench_a.csv")) return false;
  if (!run(bench + " acc_bench_b.csv")) return false;
  if (strip_runtime(slurp("acc_bench_a.csv")) !=
      strip_runtime(slurp("acc_bench_b.csv"))) {
    note = "bench non-timing output differs";
    return false;
  }
  note = "gen, 8 cluster/curves commands and bench byte-identical";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "hierarchical recurrence matches definitional recomputation",
       criterion_hierarchical},
      {2, "k-means WCSS monotone; rectangle 100 vs 1; seeding escape",
       criterion_kmeans},
      {3, "k-means++ second-center frequencies match D^2 law",
       criterion_seeding},
      {4, "PAM ends swap-neighborhood locally optimal", criterion_pam},
      {5, "CLARA with full-dataset sample equals PAM", criterion_clara},
      {6, "DBSCAN equals the connected-component oracle", criterion_dbscan},
      {7, "OPTICS extraction consistent with DBSCAN on core points",
       criterion_optics},
      {8, "GMM: monotone EM, normalization, stationarity, k recovery",
       criterion_gmm},
      {9, "benchmark accuracy bands on the three presets", criterion_bands},
      {10, "runtime ordering: k-means fastest, GMM slowest", criterion_runtime},
      {11, "CLI byte-determinism at fixed seeds", criterion_determinism},
  };

  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const auto& crit : criteria) {
    if (only && crit.id != only) continue;
    std::string notes;
    bool ok = false;
    try {
      ok = crit.run(notes);
    } catch (const std::exception& ex) {
      notes = std::string("exception: ") + ex.what();
    }
    if (!ok) ++failures;
    std::printf("[%2d] %s  %s%s%s\n", crit.id, ok ? "PASS" : "FAIL", crit.what,
                notes.empty() ? "" : " -- ", notes.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
