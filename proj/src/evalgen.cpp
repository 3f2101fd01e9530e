#include "clusterlab/evalgen.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "clusterlab/io.hpp"

namespace clusterlab {

int DatasetSpec::num_classes() const {
  return std::visit([](const auto& v) { return static_cast<int>(v.size()); },
                    classes);
}

DatasetSpec DatasetSpec::mixed4(int n, std::uint64_t seed) {
  DatasetSpec spec;
  spec.classes = std::vector<MixedClass>{
      {0.0, 3.0, 6.0}, {30.0, 3.0, 6.0}, {0.0, 3.0, 40.0}, {30.0, 3.0, 40.0}};
  spec.n = n;
  spec.seed = seed;
  return spec;
}

DatasetSpec DatasetSpec::gauss5(int n, std::uint64_t seed) {
  DatasetSpec spec;
  spec.classes = std::vector<GaussClass>{{0.0, 2.8, 0.20, 0.25},
                                         {-2.663, 0.865, 0.25, 0.20},
                                         {-1.646, -2.265, 0.28, 0.22},
                                         {1.646, -2.265, 0.22, 0.28},
                                         {2.663, 0.865, 0.18, 0.18}};
  spec.n = n;
  spec.seed = seed;
  return spec;
}

DatasetSpec DatasetSpec::poisson4(int n, std::uint64_t seed) {
  DatasetSpec spec;
  spec.classes = std::vector<PoissonClass>{
      {6.0, 6.0}, {6.0, 48.0}, {48.0, 6.0}, {48.0, 48.0}};
  spec.n = n;
  spec.seed = seed;
  return spec;
}

namespace {

std::vector<int> class_counts(int n, int c) {
  std::vector<int> counts(c, n / c);
  counts[0] += n % c;
  return counts;
}

}  // namespace

Dataset generate(const DatasetSpec& spec) {
  const int c = spec.num_classes();
  if (c < 1) throw std::invalid_argument("generate: no classes");
  if (spec.n < c)
    throw std::invalid_argument("generate: n must be >= number of classes");

  std::mt19937_64 rng(spec.seed);
  std::vector<double> coords;
  std::vector<int> labels;
  coords.reserve(static_cast<std::size_t>(spec.n) * 2);
  labels.reserve(spec.n);
  const auto counts = class_counts(spec.n, c);

  if (const auto* mixed = std::get_if<std::vector<MixedClass>>(&spec.classes)) {
    for (int cls = 0; cls < c; ++cls) {
      const auto& p = (*mixed)[cls];
      if (!(p.sigma > 0.0) || !(p.lambda > 0.0))
        throw std::invalid_argument("generate: sigma and lambda must be > 0");
      std::normal_distribution<double> gx(p.mean, p.sigma);
      std::poisson_distribution<long> gy(p.lambda);
      for (int i = 0; i < counts[cls]; ++i) {
        coords.push_back(gx(rng));
        coords.push_back(static_cast<double>(gy(rng)));
        labels.push_back(cls);
      }
    }
  } else if (const auto* gauss =
                 std::get_if<std::vector<GaussClass>>(&spec.classes)) {
    for (int cls = 0; cls < c; ++cls) {
      const auto& p = (*gauss)[cls];
      if (!(p.sx > 0.0) || !(p.sy > 0.0))
        throw std::invalid_argument("generate: sigma must be > 0");
      std::normal_distribution<double> gx(p.mx, p.sx);
      std::normal_distribution<double> gy(p.my, p.sy);
      for (int i = 0; i < counts[cls]; ++i) {
        coords.push_back(gx(rng));
        coords.push_back(gy(rng));
        labels.push_back(cls);
      }
    }
  } else {
    const auto& poisson = std::get<std::vector<PoissonClass>>(spec.classes);
    for (int cls = 0; cls < c; ++cls) {
      const auto& p = poisson[cls];
      if (!(p.lx > 0.0) || !(p.ly > 0.0))
        throw std::invalid_argument("generate: lambda must be > 0");
      std::poisson_distribution<long> gx(p.lx);
      std::poisson_distribution<long> gy(p.ly);
      for (int i = 0; i < counts[cls]; ++i) {
        coords.push_back(static_cast<double>(gx(rng)));
        coords.push_back(static_cast<double>(gy(rng)));
        labels.push_back(cls);
      }
    }
  }
  return Dataset(std::move(coords), 2, std::move(labels));
}

double accuracy(const Clustering& result, const std::vector<int>& truth) {
  const int n = static_cast<int>(truth.size());
  if (static_cast<int>(result.assignment.size()) != n)
    throw std::invalid_argument("accuracy: length mismatch");
  if (n == 0) throw std::invalid_argument("accuracy: empty input");

  int c = 0;
  for (int t : truth) {
    if (t < 0) throw std::invalid_argument("accuracy: bad class id");
    c = std::max(c, t + 1);
  }
  if (c > 20)
    throw std::invalid_argument("accuracy: too many classes for exact matching");

  // Contingency counts, noise rows dropped (they can never be correct).
  const int k = result.k;
  std::vector<int> table(static_cast<std::size_t>(std::max(k, 1)) * c, 0);
  for (int i = 0; i < n; ++i) {
    const int a = result.assignment[i];
    if (a == kNoise) continue;
    if (a < 0 || a >= k)
      throw std::invalid_argument("accuracy: cluster id out of range");
    ++table[static_cast<std::size_t>(a) * c + truth[i]];
  }

  // Exact rectangular assignment: scan clusters, tracking the best total for
  // every subset of already-used classes. Each cluster maps to one unused
  // class or to nothing.
  const int full = 1 << c;
  std::vector<int> dp(full, -1);
  dp[0] = 0;
  for (int cl = 0; cl < k; ++cl) {
    std::vector<int> next = dp;
    for (int mask = 0; mask < full; ++mask) {
      if (dp[mask] < 0) continue;
      for (int b = 0; b < c; ++b) {
        if (mask & (1 << b)) continue;
        const int cand = dp[mask] + table[static_cast<std::size_t>(cl) * c + b];
        int& slot = next[mask | (1 << b)];
        slot = std::max(slot, cand);
      }
    }
    dp = std::move(next);
  }
  const int best = *std::max_element(dp.begin(), dp.end());
  return static_cast<double>(best) / n;
}

std::vector<BenchRecord> benchmark(const Dataset& ds,
                                   const std::vector<BenchTask>& suite,
                                   int repeats) {
  if (repeats < 1) throw std::invalid_argument("benchmark: repeats must be >= 1");
  if (!ds.has_labels())
    throw std::invalid_argument("benchmark: dataset must carry labels");

  std::vector<BenchRecord> records;
  records.reserve(suite.size());
  for (const auto& task : suite) {
    BenchRecord rec;
    rec.algorithm = task.algorithm;
    rec.config = task.config;
    try {
      std::vector<double> times_ms(repeats);
      Clustering last;
      for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        last = task.run(ds);
        const auto t1 = std::chrono::steady_clock::now();
        times_ms[r] =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
      }
      std::sort(times_ms.begin(), times_ms.end());
      rec.runtime_ms = repeats % 2 == 1
                           ? times_ms[repeats / 2]
                           : 0.5 * (times_ms[repeats / 2 - 1] +
                                    times_ms[repeats / 2]);
      rec.accuracy = accuracy(last, ds.labels());
      rec.ok = true;
    } catch (const std::exception& ex) {
      rec.ok = false;
      rec.error = ex.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records,
                     std::ostream& out) {
  out << "algorithm,config,runtime_ms,accuracy\n";
  for (const auto& rec : records) {
    out << rec.algorithm << "," << rec.config << ",";
    if (rec.ok)
      out << format_double(rec.runtime_ms) << "," << format_double(rec.accuracy);
    else
      out << ",";
    out << "\n";
  }
}

namespace {

/// The config echo is "key=value ..."; expand it back into a map.
nlohmann::json config_map(const std::string& config) {
  nlohmann::json map = nlohmann::json::object();
  std::size_t pos = 0;
  while (pos < config.size()) {
    std::size_t end = config.find(' ', pos);
    if (end == std::string::npos) end = config.size();
    const std::string token = config.substr(pos, end - pos);
    pos = end + 1;
    if (token.empty()) continue;
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos)
      map[token] = true;
    else
      map[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return map;
}

}  // namespace

void write_bench_json(const std::vector<BenchRecord>& records,
                      std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& rec : records) {
    nlohmann::json row;
    row["algorithm"] = rec.algorithm;
    row["config"] = config_map(rec.config);
    if (rec.ok) {
      row["runtime_ms"] = rec.runtime_ms;
      row["accuracy"] = rec.accuracy;
    } else {
      row["error"] = rec.error;
    }
    row["ok"] = rec.ok;
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << "\n";
}

}  // namespace clusterlab
