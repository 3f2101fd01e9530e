#include "clusterlab/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "clusterlab/io.hpp"
#include "clusterlab/kmeans.hpp"

namespace clusterlab {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

/// Lower-triangular Cholesky factor of a row-major SPD matrix.
/// Returns false when a pivot is not positive.
bool cholesky(std::span<const double> a, int d, std::vector<double>& lower) {
  lower.assign(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a[static_cast<std::size_t>(i) * d + j];
      for (int m = 0; m < j; ++m)
        s -= lower[static_cast<std::size_t>(i) * d + m] *
             lower[static_cast<std::size_t>(j) * d + m];
      if (i == j) {
        if (!(s > 0.0)) return false;
        lower[static_cast<std::size_t>(i) * d + j] = std::sqrt(s);
      } else {
        lower[static_cast<std::size_t>(i) * d + j] =
            s / lower[static_cast<std::size_t>(j) * d + j];
      }
    }
  }
  return true;
}

/// Factored component: enough to evaluate its log density in O(d^2).
struct ComponentCache {
  std::vector<double> lower;
  double log_det = 0.0;  // log det(Sigma)
};

ComponentCache factor_or_throw(std::span<const double> cov, int d) {
  ComponentCache cache;
  if (!cholesky(cov, d, cache.lower))
    throw std::runtime_error("gaussian: covariance not positive definite");
  for (int i = 0; i < d; ++i)
    cache.log_det += 2.0 * std::log(cache.lower[static_cast<std::size_t>(i) * d + i]);
  return cache;
}

double log_density(const ComponentCache& cache, std::span<const double> x,
                   std::span<const double> mean, int d,
                   std::vector<double>& scratch) {
  scratch.resize(d);
  for (int i = 0; i < d; ++i) {
    double s = x[i] - mean[i];
    for (int m = 0; m < i; ++m)
      s -= cache.lower[static_cast<std::size_t>(i) * d + m] * scratch[m];
    scratch[i] = s / cache.lower[static_cast<std::size_t>(i) * d + i];
  }
  double quad = 0.0;
  for (int i = 0; i < d; ++i) quad += scratch[i] * scratch[i];
  return -0.5 * (d * kLog2Pi + cache.log_det + quad);
}

std::vector<ComponentCache> factor_all(const MixtureParams& params) {
  std::vector<ComponentCache> caches;
  caches.reserve(params.k);
  for (int l = 0; l < params.k; ++l)
    caches.push_back(factor_or_throw(params.cov(l), params.d));
  return caches;
}

void check_params(const MixtureParams& params) {
  if (params.k < 1 || params.d < 1)
    throw std::invalid_argument("mixture: k and d must be >= 1");
  if (static_cast<int>(params.weights.size()) != params.k ||
      params.means.size() != static_cast<std::size_t>(params.k) * params.d ||
      params.covs.size() !=
          static_cast<std::size_t>(params.k) * params.d * params.d)
    throw std::invalid_argument("mixture: parameter buffer sizes disagree");
}

/// Row of component log-weights + log-densities, combined by log-sum-exp.
double row_log_mixture(const MixtureParams& params,
                       const std::vector<ComponentCache>& caches,
                       std::span<const double> x, std::vector<double>& logits,
                       std::vector<double>& scratch) {
  for (int l = 0; l < params.k; ++l)
    logits[l] = std::log(params.weights[l]) +
                log_density(caches[l], x, params.mean(l), params.d, scratch);
  const double top = *std::max_element(logits.begin(), logits.begin() + params.k);
  if (!std::isfinite(top)) return top;  // all components vanish at x
  double s = 0.0;
  for (int l = 0; l < params.k; ++l) s += std::exp(logits[l] - top);
  return top + std::log(s);
}

}  // namespace

const char* cov_type_name(CovType type) {
  switch (type) {
    case CovType::kFull: return "full";
    case CovType::kDiagonal: return "diagonal";
    case CovType::kSpherical: return "spherical";
  }
  return "?";
}

CovType cov_type_from_name(const std::string& name) {
  if (name == "full") return CovType::kFull;
  if (name == "diagonal" || name == "diag") return CovType::kDiagonal;
  if (name == "spherical") return CovType::kSpherical;
  throw std::invalid_argument("unknown covariance type: " + name);
}

int param_count(CovType type, int k, int d) {
  const int base = (k - 1) + k * d;
  switch (type) {
    case CovType::kFull: return base + k * d * (d + 1) / 2;
    case CovType::kDiagonal: return base + k * d;
    case CovType::kSpherical: return base + k;
  }
  return base;
}

double log_gaussian_pdf(std::span<const double> x, std::span<const double> mean,
                        std::span<const double> cov) {
  const int d = static_cast<int>(x.size());
  if (mean.size() != x.size() ||
      cov.size() != static_cast<std::size_t>(d) * d)
    throw std::invalid_argument("gaussian: dimension mismatch");
  const auto cache = factor_or_throw(cov, d);
  std::vector<double> scratch;
  return log_density(cache, x, mean, d, scratch);
}

double gaussian_pdf(std::span<const double> x, std::span<const double> mean,
                    std::span<const double> cov) {
  return std::exp(log_gaussian_pdf(x, mean, cov));
}

double mixture_pdf(std::span<const double> x, const MixtureParams& params) {
  check_params(params);
  if (static_cast<int>(x.size()) != params.d)
    throw std::invalid_argument("mixture_pdf: dimension mismatch");
  const auto caches = factor_all(params);
  std::vector<double> logits(params.k), scratch;
  return std::exp(row_log_mixture(params, caches, x, logits, scratch));
}

double log_likelihood(const Dataset& ds, const MixtureParams& params) {
  check_params(params);
  if (ds.dim() != params.d)
    throw std::invalid_argument("log_likelihood: dimension mismatch");
  const auto caches = factor_all(params);
  std::vector<double> logits(params.k), scratch;
  double total = 0.0;
  for (int i = 0; i < ds.size(); ++i)
    total += row_log_mixture(params, caches, ds.point(i), logits, scratch);
  return total;
}

namespace {

/// E-step that also returns the current log-likelihood (both come from the
/// same per-row log-sum-exp pass).
std::pair<Responsibilities, double> e_step_ll(const Dataset& ds,
                                              const MixtureParams& params) {
  check_params(params);
  if (ds.dim() != params.d)
    throw std::invalid_argument("e_step: dimension mismatch");
  const int n = ds.size();
  const int k = params.k;
  const auto caches = factor_all(params);

  Responsibilities resp;
  resp.n = n;
  resp.k = k;
  resp.tau.assign(static_cast<std::size_t>(n) * k, 0.0);
  std::vector<double> row_ll(n, 0.0);

  std::vector<double> logits(k), scratch;
  for (int i = 0; i < n; ++i) {
    const double lse = row_log_mixture(params, caches, ds.point(i), logits, scratch);
    row_ll[i] = lse;
    if (!std::isfinite(lse)) {
      // Degenerate row: fall back to a uniform posterior.
      for (int l = 0; l < k; ++l)
        resp.tau[static_cast<std::size_t>(i) * k + l] = 1.0 / k;
      continue;
    }
    for (int l = 0; l < k; ++l)
      resp.tau[static_cast<std::size_t>(i) * k + l] = std::exp(logits[l] - lse);
  }
  // Fixed-order reduction keeps the value reproducible.
  double total = 0.0;
  for (int i = 0; i < n; ++i) total += row_ll[i];
  return {std::move(resp), total};
}

double mean_dimension_variance(const Dataset& ds) {
  const int n = ds.size();
  const int d = ds.dim();
  std::vector<double> mean(d, 0.0);
  for (int i = 0; i < n; ++i) {
    const auto p = ds.point(i);
    for (int j = 0; j < d; ++j) mean[j] += p[j];
  }
  for (int j = 0; j < d; ++j) mean[j] /= n;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto p = ds.point(i);
    for (int j = 0; j < d; ++j) {
      const double delta = p[j] - mean[j];
      total += delta * delta;
    }
  }
  return total / (static_cast<double>(n) * d);
}

/// Applies the covariance family constraint, then enforces the eigenvalue
/// floor. The floor shifts the matrix only when it is actually violated, so
/// the usual well-conditioned update stays the exact score-equation solution
/// and the EM ascent property is preserved.
void project_cov(std::vector<double>& cov, int d, CovType type, double ridge) {
  if (type == CovType::kDiagonal) {
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (a != b) cov[static_cast<std::size_t>(a) * d + b] = 0.0;
  } else if (type == CovType::kSpherical) {
    double trace = 0.0;
    for (int a = 0; a < d; ++a) trace += cov[static_cast<std::size_t>(a) * d + a];
    const double v = trace / d;
    std::fill(cov.begin(), cov.end(), 0.0);
    for (int a = 0; a < d; ++a) cov[static_cast<std::size_t>(a) * d + a] = v;
  }
  if (ridge <= 0.0) return;
  if (type == CovType::kFull) {
    // full matrices: eig >= ridge iff (cov - ridge*I) is PSD
    std::vector<double> shifted = cov;
    for (int a = 0; a < d; ++a)
      shifted[static_cast<std::size_t>(a) * d + a] -= ridge;
    std::vector<double> scratch;
    if (!cholesky(shifted, d, scratch))
      for (int a = 0; a < d; ++a)
        cov[static_cast<std::size_t>(a) * d + a] += ridge;
  } else {
    // the diagonal entries are the eigenvalues
    for (int a = 0; a < d; ++a) {
      double& v = cov[static_cast<std::size_t>(a) * d + a];
      v = std::max(v, ridge);
    }
  }
}

}  // namespace

Responsibilities e_step(const Dataset& ds, const MixtureParams& params) {
  return e_step_ll(ds, params).first;
}

MixtureParams m_step(const Dataset& ds, const Responsibilities& resp,
                     CovType cov_type, std::optional<double> ridge,
                     int* reseeded) {
  const int n = ds.size();
  const int d = ds.dim();
  const int k = resp.k;
  if (resp.n != n || k < 1)
    throw std::invalid_argument("m_step: responsibilities do not match dataset");
  const double floor_mass = 1e-10 * n;
  const double lambda = ridge.value_or(1e-6 * mean_dimension_variance(ds));

  MixtureParams out;
  out.k = k;
  out.d = d;
  out.cov_type = cov_type;
  out.weights.assign(k, 0.0);
  out.means.assign(static_cast<std::size_t>(k) * d, 0.0);
  out.covs.assign(static_cast<std::size_t>(k) * d * d, 0.0);

  std::vector<double> mass(k, 0.0);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) mass[l] += resp(i, l);

  std::vector<bool> valid(k, false);
  for (int l = 0; l < k; ++l) valid[l] = mass[l] >= floor_mass;

  std::vector<double> cov_buf(static_cast<std::size_t>(d) * d);
  for (int l = 0; l < k; ++l) {
    if (!valid[l]) continue;
    out.weights[l] = mass[l] / n;
    double* m = out.means.data() + static_cast<std::size_t>(l) * d;
    for (int i = 0; i < n; ++i) {
      const double t = resp(i, l);
      const auto p = ds.point(i);
      for (int j = 0; j < d; ++j) m[j] += t * p[j];
    }
    for (int j = 0; j < d; ++j) m[j] /= mass[l];

    std::fill(cov_buf.begin(), cov_buf.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      const double t = resp(i, l);
      const auto p = ds.point(i);
      for (int a = 0; a < d; ++a) {
        const double da = p[a] - m[a];
        for (int b = a; b < d; ++b)
          cov_buf[static_cast<std::size_t>(a) * d + b] += t * da * (p[b] - m[b]);
      }
    }
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) {
        const double v = cov_buf[static_cast<std::size_t>(a) * d + b] / mass[l];
        cov_buf[static_cast<std::size_t>(a) * d + b] = v;
        cov_buf[static_cast<std::size_t>(b) * d + a] = v;
      }
    project_cov(cov_buf, d, cov_type, lambda);
    std::copy(cov_buf.begin(), cov_buf.end(),
              out.covs.begin() + static_cast<std::size_t>(l) * d * d);
  }

  const int invalid =
      static_cast<int>(std::count(valid.begin(), valid.end(), false));
  if (reseeded) *reseeded = invalid;
  if (invalid > 0) {
    if (invalid == k)
      throw std::runtime_error("m_step: all components degenerate");

    // Re-seed each collapsed component at the point the surviving mixture
    // explains worst, with the (projected) global covariance.
    MixtureParams survivors;
    survivors.k = k - invalid;
    survivors.d = d;
    survivors.cov_type = cov_type;
    double wsum = 0.0;
    for (int l = 0; l < k; ++l)
      if (valid[l]) wsum += out.weights[l];
    for (int l = 0; l < k; ++l) {
      if (!valid[l]) continue;
      survivors.weights.push_back(out.weights[l] / wsum);
      survivors.means.insert(survivors.means.end(), out.mean(l).begin(),
                             out.mean(l).end());
      survivors.covs.insert(survivors.covs.end(), out.cov(l).begin(),
                            out.cov(l).end());
    }
    const auto caches = factor_all(survivors);
    std::vector<double> logits(survivors.k), scratch;

    std::vector<double> global_mean(d, 0.0);
    for (int i = 0; i < n; ++i) {
      const auto p = ds.point(i);
      for (int j = 0; j < d; ++j) global_mean[j] += p[j];
    }
    for (int j = 0; j < d; ++j) global_mean[j] /= n;
    std::vector<double> global_cov(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < n; ++i) {
      const auto p = ds.point(i);
      for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b)
          global_cov[static_cast<std::size_t>(a) * d + b] +=
              (p[a] - global_mean[a]) * (p[b] - global_mean[b]);
    }
    for (int a = 0; a < d; ++a)
      for (int b = a; b < d; ++b) {
        const double v = global_cov[static_cast<std::size_t>(a) * d + b] / n;
        global_cov[static_cast<std::size_t>(a) * d + b] = v;
        global_cov[static_cast<std::size_t>(b) * d + a] = v;
      }
    project_cov(global_cov, d, cov_type, lambda);

    std::vector<int> worst_points;
    std::vector<std::pair<double, int>> density(n);
    for (int i = 0; i < n; ++i)
      density[i] = {
          row_log_mixture(survivors, caches, ds.point(i), logits, scratch), i};
    std::sort(density.begin(), density.end());

    int next_worst = 0;
    for (int l = 0; l < k; ++l) {
      if (valid[l]) continue;
      const int pt = density[next_worst++].second;
      std::copy_n(ds.point(pt).data(), d,
                  out.means.begin() + static_cast<std::size_t>(l) * d);
      std::copy(global_cov.begin(), global_cov.end(),
                out.covs.begin() + static_cast<std::size_t>(l) * d * d);
      out.weights[l] = 1.0 / n;
    }
  }

  double wsum = std::accumulate(out.weights.begin(), out.weights.end(), 0.0);
  for (double& w : out.weights) w /= wsum;
  return out;
}

FitResult fit_gmm(const Dataset& ds, int k, CovType cov_type,
                  std::uint64_t seed, double tol, int max_iter) {
  const int n = ds.size();
  if (k < 1 || k > n) throw std::invalid_argument("fit_gmm: k out of range");
  if (max_iter < 1) throw std::invalid_argument("fit_gmm: max_iter must be >= 1");

  // Seeded k-means warm start: D^2 seeding, a few Lloyd rounds, then one
  // M-step from the hard assignment.
  const auto seeds = kmeanspp_seed(ds, k, seed);
  std::vector<double> centers(static_cast<std::size_t>(k) * ds.dim());
  for (int c = 0; c < k; ++c)
    std::copy_n(ds.point(seeds[c]).data(), ds.dim(),
                centers.begin() + static_cast<std::size_t>(c) * ds.dim());
  const KMeansResult warm = lloyd(ds, std::move(centers), 10, 0.0);

  Responsibilities hard;
  hard.n = n;
  hard.k = k;
  hard.tau.assign(static_cast<std::size_t>(n) * k, 0.0);
  for (int i = 0; i < n; ++i)
    hard.tau[static_cast<std::size_t>(i) * k +
             warm.clustering.assignment[i]] = 1.0;

  FitResult res;
  int reseeds_here = 0;
  res.params = m_step(ds, hard, cov_type, std::nullopt, &reseeds_here);
  res.reseed_count += reseeds_here;

  double prev_ll = -std::numeric_limits<double>::infinity();
  for (;;) {
    auto [resp, ll] = e_step_ll(ds, res.params);
    res.ll_trace.push_back(ll);
    res.responsibilities = std::move(resp);
    res.log_likelihood = ll;
    if (res.ll_trace.size() >= 2 &&
        std::abs(ll - prev_ll) <= tol * std::max(std::abs(ll), 1e-10)) {
      res.converged = true;
      break;
    }
    if (res.iterations >= max_iter) break;
    res.params =
        m_step(ds, res.responsibilities, cov_type, std::nullopt, &reseeds_here);
    res.reseed_count += reseeds_here;
    if (res.reseed_count > 3)
      throw std::runtime_error(
          "fit_gmm: persistent component degeneracy (more than 3 re-seeds)");
    ++res.iterations;
    prev_ll = ll;
  }

  res.clustering.k = k;
  res.clustering.assignment.resize(n);
  for (int i = 0; i < n; ++i) {
    int best = 0;
    for (int l = 1; l < k; ++l)
      if (res.responsibilities(i, l) > res.responsibilities(i, best)) best = l;
    res.clustering.assignment[i] = best;
  }
  return res;
}

double bic(double ll, int q, int n) {
  if (n < 1) throw std::invalid_argument("bic: n must be >= 1");
  return 2.0 * ll - q * std::log(static_cast<double>(n));
}

BicScan bic_scan(const Dataset& ds, int k_min, int k_max,
                 const std::vector<CovType>& cov_types, std::uint64_t seed,
                 double tol, int max_iter) {
  if (k_min < 1 || k_max < k_min)
    throw std::invalid_argument("bic_scan: bad k range");
  if (cov_types.empty())
    throw std::invalid_argument("bic_scan: need at least one covariance type");

  BicScan scan;
  std::uint64_t cell = 0;
  for (int k = k_min; k <= k_max; ++k) {
    for (const CovType ct : cov_types) {
      BicCell row;
      row.k = k;
      row.cov_type = ct;
      row.q = param_count(ct, k, ds.dim());
      try {
        const FitResult fit = fit_gmm(ds, k, ct, seed + cell, tol, max_iter);
        row.ll = fit.log_likelihood;
        row.bic = bic(row.ll, row.q, ds.size());
        row.converged = fit.converged;
      } catch (const std::exception&) {
        row.failed = true;
        row.bic = std::numeric_limits<double>::quiet_NaN();
        row.ll = std::numeric_limits<double>::quiet_NaN();
      }
      const int idx = static_cast<int>(scan.cells.size());
      if (!row.failed &&
          (scan.best_index < 0 || row.bic > scan.cells[scan.best_index].bic))
        scan.best_index = idx;
      scan.cells.push_back(row);
      ++cell;
    }
  }
  return scan;
}

void write_bic_csv(const BicScan& scan, std::ostream& out) {
  out << "k,cov_type,bic,converged\n";
  for (const auto& cell : scan.cells)
    out << cell.k << "," << cov_type_name(cell.cov_type) << ","
        << format_double(cell.bic) << "," << (cell.converged ? 1 : 0) << "\n";
}

}  // namespace clusterlab
