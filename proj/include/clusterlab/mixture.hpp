#ifndef CLUSTERLAB_MIXTURE_HPP
#define CLUSTERLAB_MIXTURE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clusterlab/core.hpp"

namespace clusterlab {

enum class CovType { kFull, kDiagonal, kSpherical };

const char* cov_type_name(CovType type);
CovType cov_type_from_name(const std::string& name);

/// Free parameters of a k-component model in d dimensions:
/// mixing weights plus per-component means and covariance entries.
int param_count(CovType type, int k, int d);

struct MixtureParams {
  int k = 0;
  int d = 0;
  CovType cov_type = CovType::kFull;
  std::vector<double> weights;  // k, positive, sums to 1
  std::vector<double> means;    // k x d row-major
  std::vector<double> covs;     // k blocks of d x d row-major, each SPD
  std::span<const double> mean(int l) const {
    return {means.data() + static_cast<std::size_t>(l) * d,
            static_cast<std::size_t>(d)};
  }
  std::span<const double> cov(int l) const {
    return {covs.data() + static_cast<std::size_t>(l) * d * d,
            static_cast<std::size_t>(d) * d};
  }
};

double gaussian_pdf(std::span<const double> x, std::span<const double> mean,
                    std::span<const double> cov);
double log_gaussian_pdf(std::span<const double> x, std::span<const double> mean,
                        std::span<const double> cov);

double mixture_pdf(std::span<const double> x, const MixtureParams& params);

/// Total log density of the dataset, log-sum-exp stabilized.
double log_likelihood(const Dataset& ds, const MixtureParams& params);

/// Posterior component probabilities, one row per point.
struct Responsibilities {
  int n = 0;
  int k = 0;
  std::vector<double> tau;  // n x k row-major, rows sum to 1
  double operator()(int i, int l) const {
    return tau[static_cast<std::size_t>(i) * k + l];
  }
};

Responsibilities e_step(const Dataset& ds, const MixtureParams& params);

/// Weighted weights/means/covariances update. Covariances are projected to
/// cov_type and ridged on the diagonal; `ridge` overrides the default
/// 1e-6 x (mean per-dimension data variance) floor. Components whose
/// responsibility mass collapses are re-seeded at the lowest-density point.
MixtureParams m_step(const Dataset& ds, const Responsibilities& resp,
                     CovType cov_type,
                     std::optional<double> ridge = std::nullopt,
                     int* reseeded = nullptr);

struct FitResult {
  MixtureParams params;
  Responsibilities responsibilities;
  double log_likelihood = 0.0;
  std::vector<double> ll_trace;
  Clustering clustering;  // per-row argmax, no noise
  int iterations = 0;     // number of M-steps taken
  bool converged = false;
  int reseed_count = 0;
};

FitResult fit_gmm(const Dataset& ds, int k, CovType cov_type,
                  std::uint64_t seed, double tol = 1e-6, int max_iter = 200);

/// BIC = 2*ll - q*ln(n); larger is better.
double bic(double ll, int q, int n);

struct BicCell {
  int k = 0;
  CovType cov_type = CovType::kFull;
  double bic = 0.0;
  double ll = 0.0;
  int q = 0;
  bool converged = false;
  bool failed = false;
};

struct BicScan {
  std::vector<BicCell> cells;
  int best_index = -1;  // argmax BIC among non-failed cells
};

/// Fits every (k, cov_type) cell with seed + cell index and scores it.
/// Per-cell failures are recorded, not thrown.
BicScan bic_scan(const Dataset& ds, int k_min, int k_max,
                 const std::vector<CovType>& cov_types, std::uint64_t seed,
                 double tol = 1e-6, int max_iter = 200);

/// CSV export: "k,cov_type,bic,converged".
void write_bic_csv(const BicScan& scan, std::ostream& out);

}  // namespace clusterlab

#endif  // CLUSTERLAB_MIXTURE_HPP
