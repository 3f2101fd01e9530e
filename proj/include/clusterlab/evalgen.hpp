#ifndef CLUSTERLAB_EVALGEN_HPP
#define CLUSTERLAB_EVALGEN_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "clusterlab/core.hpp"

namespace clusterlab {

/// coord 0 ~ Normal(mean, sigma), coord 1 ~ Poisson(lambda).
struct MixedClass {
  double mean = 0.0;
  double sigma = 1.0;
  double lambda = 1.0;
};

/// Independent bivariate Gaussian: Normal(mx, sx) x Normal(my, sy).
struct GaussClass {
  double mx = 0.0;
  double my = 0.0;
  double sx = 1.0;
  double sy = 1.0;
};

/// Both coordinates Poisson: Poisson(lx) x Poisson(ly).
struct PoissonClass {
  double lx = 1.0;
  double ly = 1.0;
};

/// One labeled synthetic dataset: n points split evenly over the classes
/// (remainder to class 0), drawn deterministically from the seed.
struct DatasetSpec {
  std::variant<std::vector<MixedClass>, std::vector<GaussClass>,
               std::vector<PoissonClass>>
      classes;
  int n = 0;
  std::uint64_t seed = 0;

  int num_classes() const;

  // Frozen default parameterizations of the three benchmark families.
  static DatasetSpec mixed4(int n, std::uint64_t seed);
  static DatasetSpec gauss5(int n, std::uint64_t seed);
  static DatasetSpec poisson4(int n, std::uint64_t seed);
};

Dataset generate(const DatasetSpec& spec);

/// Fraction of points explained by the best injective mapping of cluster ids
/// onto class ids. Noise never counts; clusters beyond the class count map
/// to nothing.
double accuracy(const Clustering& result, const std::vector<int>& truth);

/// One benchmark row: a named configuration plus the closure that runs it.
struct BenchTask {
  std::string algorithm;
  std::string config;  // human-readable parameter echo
  std::function<Clustering(const Dataset&)> run;
};

struct BenchRecord {
  std::string algorithm;
  std::string config;
  double runtime_ms = 0.0;  // median over repeats
  double accuracy = 0.0;    // of the final repeat
  bool ok = false;
  std::string error;
};

/// Times each task `repeats` times (median wall clock of the clustering call
/// only) and scores the final run against the dataset labels. Tasks run
/// sequentially, in order; failures produce failed rows.
std::vector<BenchRecord> benchmark(const Dataset& ds,
                                   const std::vector<BenchTask>& suite,
                                   int repeats);

/// CSV export: "algorithm,config,runtime_ms,accuracy".
void write_bench_csv(const std::vector<BenchRecord>& records,
                     std::ostream& out);
/// JSON export with the full configuration echo per row.
void write_bench_json(const std::vector<BenchRecord>& records,
                      std::ostream& out);

}  // namespace clusterlab

#endif  // CLUSTERLAB_EVALGEN_HPP
