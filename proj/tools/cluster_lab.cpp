// Command-line front end: dataset generation, clustering, diagnostic curves,
// and the three-dataset benchmark reproduction.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "clusterlab/core.hpp"
#include "clusterlab/density.hpp"
#include "clusterlab/evalgen.hpp"
#include "clusterlab/hierarchical.hpp"
#include "clusterlab/io.hpp"
#include "clusterlab/kmeans.hpp"
#include "clusterlab/medoids.hpp"
#include "clusterlab/mixture.hpp"
#include "clusterlab/presets.hpp"

namespace {

using nlohmann::json;
using namespace clusterlab;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenArgs {
  std::string preset;
  int n = 1000;
  std::uint64_t seed = 0;
  std::string out;
  std::string params_file;
};

struct ClusterArgs {
  std::string algo;
  std::string input;
  std::string out;
  int k = 0;
  std::uint64_t seed = 0;
  double eps = 0.0;
  bool eps_set = false;
  int min_pts = 0;
  bool min_pts_set = false;
  double threshold = 0.0;
  bool threshold_set = false;
  std::string linkage = "upgma";
  std::string metric;
  std::string cov = "diagonal";
  std::string init = "forgy";
  int max_iter = 0;
  double tol = -1.0;
  int samples = 5;
  int sample_size = 0;
};

struct CurvesArgs {
  std::string kind;
  std::string input;
  std::string out;
  int k = 4;
  int k_min = 1;
  int k_max = 0;
  int restarts = 10;
  std::uint64_t seed = 0;
  int min_pts = 5;
  double eps = kUndefinedDistance;
  std::string linkage = "upgma";
  std::string metric;
};

struct BenchArgs {
  int preset = 0;
  std::string data;
  std::string suite;
  int n = 1000;
  std::uint64_t seed = 117;
  int repeats = 5;
  std::string out;
  std::string json_out;
};

std::unique_ptr<std::ofstream> open_out_file(const std::string& path) {
  auto f = std::make_unique<std::ofstream>(path);
  if (!*f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

/// Writes to the path, or to stdout when the path is empty.
void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
  } else {
    auto f = open_out_file(path);
    fn(*f);
    if (!*f) throw std::runtime_error("write failed: " + path);
  }
}

DatasetSpec spec_from_json(const json& j, int n, std::uint64_t seed) {
  DatasetSpec spec;
  spec.n = n;
  spec.seed = seed;
  const std::string family = j.at("family").get<std::string>();
  if (family == "mixed") {
    std::vector<MixedClass> classes;
    for (const auto& row : j.at("classes"))
      classes.push_back({row.at("mean").get<double>(),
                         row.at("sigma").get<double>(),
                         row.at("lambda").get<double>()});
    spec.classes = std::move(classes);
  } else if (family == "gauss") {
    std::vector<GaussClass> classes;
    for (const auto& row : j.at("classes"))
      classes.push_back(
          {row.at("mx").get<double>(), row.at("my").get<double>(),
           row.at("sx").get<double>(), row.at("sy").get<double>()});
    spec.classes = std::move(classes);
  } else if (family == "poisson") {
    std::vector<PoissonClass> classes;
    for (const auto& row : j.at("classes"))
      classes.push_back({row.at("lx").get<double>(), row.at("ly").get<double>()});
    spec.classes = std::move(classes);
  } else {
    throw UsageError("unknown family in params file: " + family);
  }
  return spec;
}

int run_gen(const GenArgs& args) {
  DatasetSpec spec;
  if (!args.params_file.empty()) {
    std::ifstream in(args.params_file);
    if (!in) throw std::runtime_error("cannot open " + args.params_file);
    json j;
    in >> j;
    spec = spec_from_json(j, args.n, args.seed);
  } else if (args.preset == "mixed4") {
    spec = DatasetSpec::mixed4(args.n, args.seed);
  } else if (args.preset == "gauss5") {
    spec = DatasetSpec::gauss5(args.n, args.seed);
  } else if (args.preset == "poisson4") {
    spec = DatasetSpec::poisson4(args.n, args.seed);
  } else {
    throw UsageError("--preset must be mixed4, gauss5 or poisson4 "
                     "(or use --params)");
  }
  const Dataset ds = generate(spec);
  write_dataset_csv_file(ds, args.out);

  std::vector<int> counts(ds.num_classes(), 0);
  for (int label : ds.labels()) ++counts[label];
  std::cout << args.out << "\n";
  for (int c = 0; c < ds.num_classes(); ++c)
    std::cout << "class " << c << ": " << counts[c] << " points\n";
  return 0;
}

json clustering_to_json(const Clustering& clustering) {
  json assignment = json::array();
  for (int a : clustering.assignment) {
    if (a == kNoise)
      assignment.push_back(nullptr);
    else
      assignment.push_back(a);
  }
  return assignment;
}

void require(bool present, const std::string& flag, const std::string& algo) {
  if (!present)
    throw UsageError("missing " + flag + " (required for --algo " + algo + ")");
}

int run_cluster(const ClusterArgs& args) {
  if (!args.metric.empty()) metric_from_name(args.metric);  // value check
  const Dataset ds = read_dataset_csv_file(args.input);
  json out;
  out["algorithm"] = args.algo;
  json cfg = json::object();
  Clustering clustering;

  if (args.algo == "kmeans" || args.algo == "kmeans++") {
    require(args.k > 0, "--k", args.algo);
    KMeansConfig kc;
    kc.k = args.k;
    kc.seed = args.seed;
    kc.init = args.algo == "kmeans++" ? KMeansInit::kPlusPlus
                                      : kmeans_init_from_name(args.init);
    if (args.max_iter > 0) kc.max_iter = args.max_iter;
    if (args.tol >= 0) kc.tol = args.tol;
    const KMeansResult res = kmeans(ds, kc);
    clustering = res.clustering;
    cfg["k"] = kc.k;
    cfg["init"] = kmeans_init_name(kc.init);
    cfg["seed"] = kc.seed;
    cfg["max_iter"] = kc.max_iter;
    cfg["tol"] = kc.tol;
    out["wcss"] = res.wcss;
    out["iterations"] = res.iterations;
  } else if (args.algo == "hierarchical" || args.algo == "upgma") {
    require(args.k > 0, "--k", args.algo);
    const Linkage linkage = args.algo == "upgma"
                                ? Linkage::kUpgma
                                : linkage_from_name(args.linkage);
    Metric metric = linkage == Linkage::kWard ? Metric::kSquaredEuclidean
                                              : Metric::kEuclidean;
    if (!args.metric.empty()) metric = metric_from_name(args.metric);
    clustering = cut(agglomerate(ds, linkage, metric), args.k);
    cfg["k"] = args.k;
    cfg["linkage"] = linkage_name(linkage);
    cfg["metric"] = metric_name(metric);
  } else if (args.algo == "pam") {
    require(args.k > 0, "--k", args.algo);
    const Metric metric =
        args.metric.empty() ? Metric::kEuclidean : metric_from_name(args.metric);
    const MedoidResult res = pam(ds, args.k, metric);
    clustering = res.clustering;
    cfg["k"] = args.k;
    cfg["metric"] = metric_name(metric);
    out["total_cost"] = res.total_cost;
    out["medoids"] = res.medoids;
  } else if (args.algo == "clara") {
    require(args.k > 0, "--k", args.algo);
    const Metric metric =
        args.metric.empty() ? Metric::kEuclidean : metric_from_name(args.metric);
    ClaraConfig cc;
    cc.k = args.k;
    cc.num_samples = args.samples;
    cc.sample_size = args.sample_size;
    cc.seed = args.seed;
    const MedoidResult res = clara(ds, cc, metric);
    clustering = res.clustering;
    cfg["k"] = cc.k;
    cfg["samples"] = cc.num_samples;
    cfg["sample_size"] = cc.sample_size > 0 ? cc.sample_size : 40 + 2 * cc.k;
    cfg["seed"] = cc.seed;
    cfg["metric"] = metric_name(metric);
    out["total_cost"] = res.total_cost;
    out["medoids"] = res.medoids;
  } else if (args.algo == "dbscan") {
    require(args.eps_set, "--eps", args.algo);
    require(args.min_pts_set, "--min-pts", args.algo);
    if (ds.dim() > 2 && args.min_pts < 2 * ds.dim())
      std::cerr << "hint: for " << ds.dim() << "-dimensional data the usual "
                << "rule of thumb is --min-pts " << 2 * ds.dim() << "\n";
    const Metric metric =
        args.metric.empty() ? Metric::kEuclidean : metric_from_name(args.metric);
    clustering = dbscan(ds, {args.eps, args.min_pts}, metric);
    cfg["eps"] = args.eps;
    cfg["min_pts"] = args.min_pts;
    cfg["metric"] = metric_name(metric);
  } else if (args.algo == "optics") {
    require(args.threshold_set, "--threshold", args.algo);
    const int min_pts = args.min_pts_set ? args.min_pts : 5;
    if (ds.dim() > 2 && min_pts < 2 * ds.dim())
      std::cerr << "hint: for " << ds.dim() << "-dimensional data the usual "
                << "rule of thumb is --min-pts " << 2 * ds.dim() << "\n";
    const Metric metric =
        args.metric.empty() ? Metric::kEuclidean : metric_from_name(args.metric);
    const double eps = args.eps_set ? args.eps : kUndefinedDistance;
    const OpticsOrdering ord = optics(ds, min_pts, eps, metric);
    clustering = extract_clusters(ord, args.threshold);
    cfg["min_pts"] = min_pts;
    cfg["eps"] = std::isfinite(eps) ? json(eps) : json("inf");
    cfg["threshold"] = args.threshold;
    cfg["metric"] = metric_name(metric);
  } else if (args.algo == "gmm") {
    require(args.k > 0, "--k", args.algo);
    const CovType cov = cov_type_from_name(args.cov);
    const double tol = args.tol >= 0 ? args.tol : 1e-6;
    const int max_iter = args.max_iter > 0 ? args.max_iter : 200;
    const FitResult res = fit_gmm(ds, args.k, cov, args.seed, tol, max_iter);
    clustering = res.clustering;
    cfg["k"] = args.k;
    cfg["cov"] = cov_type_name(cov);
    cfg["seed"] = args.seed;
    cfg["tol"] = tol;
    cfg["max_iter"] = max_iter;
    out["log_likelihood"] = res.log_likelihood;
    json model;
    model["weights"] = res.params.weights;
    model["means"] = res.params.means;
    model["covariances"] = res.params.covs;  // row-major d x d blocks
    model["cov_type"] = cov_type_name(cov);
    model["log_likelihood"] = res.log_likelihood;
    out["model"] = std::move(model);
  } else {
    throw UsageError("unknown --algo: " + args.algo);
  }

  out["config"] = std::move(cfg);
  out["k"] = clustering.k;
  out["assignment"] = clustering_to_json(clustering);
  with_output(args.out, [&](std::ostream& os) { os << out.dump(2) << "\n"; });
  return 0;
}

int run_curves(const CurvesArgs& args) {
  const Dataset ds = read_dataset_csv_file(args.input);
  if (args.kind == "wcss") {
    if (args.k_max < 1) throw UsageError("missing --k-max for wcss curve");
    KMeansConfig base;
    base.seed = args.seed;
    const auto curve =
        wcss_curve(ds, args.k_min, args.k_max, base, args.restarts);
    with_output(args.out, [&](std::ostream& os) { write_wcss_csv(curve, os); });
  } else if (args.kind == "kdist") {
    const Metric metric =
        args.metric.empty() ? Metric::kEuclidean : metric_from_name(args.metric);
    const auto curve = kdist_curve(ds, args.k, metric);
    with_output(args.out, [&](std::ostream& os) { write_kdist_csv(curve, os); });
  } else if (args.kind == "reachability") {
    const Metric metric =
        args.metric.empty() ? Metric::kEuclidean : metric_from_name(args.metric);
    const auto ord = optics(ds, args.min_pts, args.eps, metric);
    with_output(args.out,
                [&](std::ostream& os) { write_reachability_csv(ord, os); });
  } else if (args.kind == "bic") {
    if (args.k_max < 1) throw UsageError("missing --k-max for bic curve");
    const auto scan = bic_scan(
        ds, args.k_min, args.k_max,
        {CovType::kFull, CovType::kDiagonal, CovType::kSpherical}, args.seed);
    with_output(args.out, [&](std::ostream& os) { write_bic_csv(scan, os); });
  } else if (args.kind == "dendrogram") {
    const Linkage linkage = linkage_from_name(args.linkage);
    Metric metric = linkage == Linkage::kWard ? Metric::kSquaredEuclidean
                                              : Metric::kEuclidean;
    if (!args.metric.empty()) metric = metric_from_name(args.metric);
    const auto tree = agglomerate(ds, linkage, metric);
    with_output(args.out,
                [&](std::ostream& os) { write_dendrogram_csv(tree, os); });
  } else {
    throw UsageError("unknown --kind: " + args.kind);
  }
  return 0;
}

std::vector<BenchTask> parse_suite_file(const std::string& path,
                                        std::uint64_t default_seed) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<BenchTask> tasks;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream row(line);
    std::string algo;
    row >> algo;
    if (algo.empty() || algo[0] == '#') continue;

    std::map<std::string, std::string> kv;
    std::string token;
    while (row >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos)
        throw UsageError("suite file line " + std::to_string(lineno) +
                         ": expected key=value, got " + token);
      kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    const auto get_int = [&](const std::string& key, std::optional<int> dflt =
                                                         std::nullopt) {
      auto it = kv.find(key);
      if (it == kv.end()) {
        if (dflt) return *dflt;
        throw UsageError("suite file line " + std::to_string(lineno) +
                         ": missing " + key);
      }
      return std::stoi(it->second);
    };
    const auto get_double = [&](const std::string& key,
                                std::optional<double> dflt = std::nullopt) {
      auto it = kv.find(key);
      if (it == kv.end()) {
        if (dflt) return *dflt;
        throw UsageError("suite file line " + std::to_string(lineno) +
                         ": missing " + key);
      }
      return std::stod(it->second);
    };
    const auto get_str = [&](const std::string& key, const std::string& dflt) {
      auto it = kv.find(key);
      return it == kv.end() ? dflt : it->second;
    };
    const std::uint64_t seed = kv.count("seed")
                                   ? std::stoull(kv.at("seed"))
                                   : default_seed;

    BenchTask task;
    task.algorithm = algo;
    std::string echo;
    for (const auto& [key, value] : kv) echo += key + "=" + value + " ";
    if (!kv.count("seed")) echo += "seed=" + std::to_string(seed) + " ";
    if (!echo.empty()) echo.pop_back();
    task.config = echo;

    if (algo == "kmeans" || algo == "kmeans++") {
      KMeansConfig cfg;
      cfg.k = get_int("k");
      cfg.seed = seed;
      cfg.init = algo == "kmeans++"
                     ? KMeansInit::kPlusPlus
                     : kmeans_init_from_name(get_str("init", "forgy"));
      task.run = [cfg](const Dataset& ds) { return kmeans(ds, cfg).clustering; };
    } else if (algo == "gmm") {
      const int k = get_int("k");
      const CovType cov = cov_type_from_name(get_str("cov", "diagonal"));
      const int scan_k_max = get_int("scan_k_max", 0);
      task.run = [k, cov, scan_k_max, seed](const Dataset& ds) {
        if (scan_k_max > 0)
          bic_scan(ds, 1, scan_k_max,
                   {CovType::kFull, CovType::kDiagonal, CovType::kSpherical},
                   seed);
        return fit_gmm(ds, k, cov, seed).clustering;
      };
    } else if (algo == "pam") {
      const int k = get_int("k");
      const Metric metric = metric_from_name(get_str("metric", "euclidean"));
      task.run = [k, metric](const Dataset& ds) {
        return pam(ds, k, metric).clustering;
      };
    } else if (algo == "clara") {
      ClaraConfig cfg;
      cfg.k = get_int("k");
      cfg.num_samples = get_int("samples", 5);
      cfg.sample_size = get_int("sample_size", 0);
      cfg.seed = seed;
      const Metric metric = metric_from_name(get_str("metric", "euclidean"));
      task.run = [cfg, metric](const Dataset& ds) {
        return clara(ds, cfg, metric).clustering;
      };
    } else if (algo == "upgma" || algo == "hierarchical") {
      const int k = get_int("k");
      const Linkage linkage =
          linkage_from_name(get_str("linkage", algo == "upgma" ? "upgma"
                                                               : "single"));
      const Metric metric = metric_from_name(
          get_str("metric", linkage == Linkage::kWard ? "sqeuclidean"
                                                      : "euclidean"));
      task.run = [k, linkage, metric](const Dataset& ds) {
        return cut(agglomerate(ds, linkage, metric), k);
      };
    } else if (algo == "dbscan") {
      const DbscanConfig cfg{get_double("eps"), get_int("min_pts")};
      const Metric metric = metric_from_name(get_str("metric", "euclidean"));
      task.run = [cfg, metric](const Dataset& ds) {
        return dbscan(ds, cfg, metric);
      };
    } else if (algo == "optics") {
      const int min_pts = get_int("min_pts", 5);
      const double eps = get_double("eps", kUndefinedDistance);
      const double threshold = get_double("threshold");
      const Metric metric = metric_from_name(get_str("metric", "euclidean"));
      task.run = [min_pts, eps, threshold, metric](const Dataset& ds) {
        return extract_clusters(optics(ds, min_pts, eps, metric), threshold);
      };
    } else {
      throw UsageError("suite file line " + std::to_string(lineno) +
                       ": unknown algorithm " + algo);
    }
    tasks.push_back(std::move(task));
  }
  return tasks;
}

int run_bench(const BenchArgs& args) {
  Dataset ds = [&] {
    if (args.preset > 0)
      return generate(presets::dataset(args.preset, args.n, args.seed));
    if (args.data.empty())
      throw UsageError("bench needs --preset or --data with --suite");
    return read_dataset_csv_file(args.data);
  }();

  std::vector<BenchTask> suite;
  if (args.preset > 0) {
    suite = presets::suite(args.preset, args.seed);
  } else {
    if (args.suite.empty()) throw UsageError("bench --data requires --suite");
    suite = parse_suite_file(args.suite, args.seed);
  }

  const auto records = benchmark(ds, suite, args.repeats);

  std::printf("%-22s %-52s %12s %10s\n", "algorithm", "config", "runtime_ms",
              "accuracy");
  for (const auto& rec : records) {
    if (rec.ok)
      std::printf("%-22s %-52s %12.6g %10.6g\n", rec.algorithm.c_str(),
                  rec.config.c_str(), rec.runtime_ms, rec.accuracy);
    else
      std::printf("%-22s %-52s failed: %s\n", rec.algorithm.c_str(),
                  rec.config.c_str(), rec.error.c_str());
  }

  std::string out = args.out;
  if (out.empty())
    out = args.preset > 0 ? "bench_preset" + std::to_string(args.preset) + ".csv"
                          : "bench.csv";
  {
    auto f = open_out_file(out);
    write_bench_csv(records, *f);
  }
  std::printf("wrote %s\n", out.c_str());
  if (!args.json_out.empty()) {
    auto f = open_out_file(args.json_out);
    write_bench_json(records, *f);
    std::printf("wrote %s\n", args.json_out.c_str());
  }

  for (const auto& rec : records)
    if (!rec.ok) std::fprintf(stderr, "row failed: %s\n", rec.algorithm.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clustering lab: generators, eight clustering algorithms, "
               "diagnostic curves and a benchmark harness"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate a labeled dataset CSV");
  gen_cmd->add_option("--preset", gen_args.preset,
                      "mixed4 | gauss5 | poisson4");
  gen_cmd->add_option("--params", gen_args.params_file,
                      "JSON file overriding the class parameters");
  gen_cmd->add_option("--n", gen_args.n, "total points")->capture_default_str();
  gen_cmd->add_option("--seed", gen_args.seed, "RNG seed")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen_args.out, "output CSV path")->required();

  ClusterArgs cl_args;
  auto* cl_cmd = app.add_subcommand("cluster", "cluster a dataset CSV");
  cl_cmd->add_option("--algo", cl_args.algo,
                     "kmeans | kmeans++ | hierarchical | upgma | pam | clara "
                     "| dbscan | optics | gmm")
      ->required();
  cl_cmd->add_option("input", cl_args.input, "dataset CSV")->required();
  cl_cmd->add_option("--out", cl_args.out, "output JSON path (default stdout)");
  cl_cmd->add_option("--k", cl_args.k, "cluster count");
  cl_cmd->add_option("--seed", cl_args.seed, "RNG seed")->capture_default_str();
  cl_cmd->add_option("--eps", cl_args.eps, "neighborhood radius")
      ->each([&](const std::string&) { cl_args.eps_set = true; });
  cl_cmd->add_option("--min-pts", cl_args.min_pts, "density threshold")
      ->each([&](const std::string&) { cl_args.min_pts_set = true; });
  cl_cmd->add_option("--threshold", cl_args.threshold,
                     "reachability cutoff (optics)")
      ->each([&](const std::string&) { cl_args.threshold_set = true; });
  cl_cmd->add_option("--linkage", cl_args.linkage,
                     "single | complete | upgma | ward")
      ->capture_default_str();
  cl_cmd->add_option("--metric", cl_args.metric,
                     "euclidean | sqeuclidean | manhattan");
  cl_cmd->add_option("--cov", cl_args.cov, "full | diagonal | spherical")
      ->capture_default_str();
  cl_cmd->add_option("--init", cl_args.init,
                     "forgy | random-partition (kmeans)")
      ->capture_default_str();
  cl_cmd->add_option("--max-iter", cl_args.max_iter, "iteration cap");
  cl_cmd->add_option("--tol", cl_args.tol, "relative convergence tolerance");
  cl_cmd->add_option("--samples", cl_args.samples, "CLARA sample count")
      ->capture_default_str();
  cl_cmd->add_option("--sample-size", cl_args.sample_size,
                     "CLARA sample size (0 = 40+2k)");

  CurvesArgs cv_args;
  auto* cv_cmd = app.add_subcommand(
      "curves", "export wcss / kdist / reachability / bic / dendrogram data");
  cv_cmd->add_option("--kind", cv_args.kind,
                     "wcss | kdist | reachability | bic | dendrogram")
      ->required();
  cv_cmd->add_option("input", cv_args.input, "dataset CSV")->required();
  cv_cmd->add_option("--out", cv_args.out, "output CSV path (default stdout)");
  cv_cmd->add_option("--k", cv_args.k, "neighbor rank for kdist")
      ->capture_default_str();
  cv_cmd->add_option("--k-min", cv_args.k_min, "first k")->capture_default_str();
  cv_cmd->add_option("--k-max", cv_args.k_max, "last k (wcss, bic)");
  cv_cmd->add_option("--restarts", cv_args.restarts, "runs per k (wcss)")
      ->capture_default_str();
  cv_cmd->add_option("--seed", cv_args.seed, "RNG seed")->capture_default_str();
  cv_cmd->add_option("--min-pts", cv_args.min_pts, "optics min_pts")
      ->capture_default_str();
  cv_cmd->add_option("--eps", cv_args.eps, "optics eps (default inf)");
  cv_cmd->add_option("--linkage", cv_args.linkage, "dendrogram linkage")
      ->capture_default_str();
  cv_cmd->add_option("--metric", cv_args.metric,
                     "euclidean | sqeuclidean | manhattan");

  BenchArgs bn_args;
  auto* bn_cmd =
      app.add_subcommand("bench", "run the benchmark suite on a dataset");
  bn_cmd->add_option("--preset", bn_args.preset, "1 | 2 | 3");
  bn_cmd->add_option("--data", bn_args.data, "dataset CSV (with --suite)");
  bn_cmd->add_option("--suite", bn_args.suite,
                     "suite file: one '<algo> key=value ...' per line");
  bn_cmd->add_option("--n", bn_args.n, "points for --preset datasets")
      ->capture_default_str();
  bn_cmd->add_option("--seed", bn_args.seed, "RNG seed")->capture_default_str();
  bn_cmd->add_option("--repeats", bn_args.repeats, "timing repeats")
      ->capture_default_str();
  bn_cmd->add_option("--out", bn_args.out, "benchmark CSV path");
  bn_cmd->add_option("--json", bn_args.json_out, "benchmark JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen_args);
    if (cl_cmd->parsed()) return run_cluster(cl_args);
    if (cv_cmd->parsed()) return run_curves(cv_args);
    if (bn_cmd->parsed()) return run_bench(bn_args);
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
