#include <algorithm>
#include <random>

#include <doctest.h>

#include "clusterlab/medoids.hpp"
#include "oracles.hpp"

using namespace clusterlab;

namespace {

Dataset two_pairs() {
  // two tight pairs far apart on a line
  return Dataset({0.0, 1.0, 10.0, 11.0}, 1);
}

double cost_of(const DistanceMatrix& dm, const std::vector<int>& medoids) {
  double cost = 0.0;
  for (int j = 0; j < dm.size(); ++j) {
    double best = std::numeric_limits<double>::infinity();
    for (int m : medoids) best = std::min(best, dm(j, m));
    cost += best;
  }
  return cost;
}

}  // namespace

TEST_CASE("build picks the most central point for k = 1") {
  const Dataset ds({0.0, 1.0, 10.0}, 1);
  const auto dm = DistanceMatrix::compute(ds, Metric::kEuclidean);
  const auto medoids = pam_build(dm, 1);
  REQUIRE(medoids.size() == 1);
  CHECK(medoids[0] == 1);  // totals are 11, 10, 19
}

TEST_CASE("build with k = n selects everything") {
  std::mt19937_64 rng(8);
  const auto ds = oracles::random_dataset(6, 2, rng);
  const auto dm = DistanceMatrix::compute(ds, Metric::kEuclidean);
  auto medoids = pam_build(dm, 6);
  std::sort(medoids.begin(), medoids.end());
  for (int i = 0; i < 6; ++i) CHECK(medoids[i] == i);
}

TEST_CASE("build covers both far-apart pairs at k = 2") {
  const auto ds = two_pairs();
  const auto dm = DistanceMatrix::compute(ds, Metric::kEuclidean);
  const auto medoids = pam_build(dm, 2);
  const bool left = medoids[0] <= 1, right = medoids[1] >= 2;
  const bool left2 = medoids[1] <= 1, right2 = medoids[0] >= 2;
  CHECK((left && right) == !(left2 && right2));
}

TEST_CASE("swap returns an already-optimal configuration unchanged") {
  const auto ds = two_pairs();
  const auto dm = DistanceMatrix::compute(ds, Metric::kEuclidean);
  const auto res = pam_swap(dm, {0, 2});
  CHECK(res.medoids == std::vector<int>{0, 2});
  CHECK(res.total_cost == doctest::Approx(2.0));
}

TEST_CASE("swap moves a doubled-up medoid to the other pair") {
  const auto ds = two_pairs();
  const auto dm = DistanceMatrix::compute(ds, Metric::kEuclidean);
  const auto res = pam_swap(dm, {0, 1});  // both medoids in the left pair
  std::vector<int> sorted = res.medoids;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted[0] <= 1);
  CHECK(sorted[1] >= 2);
  CHECK(res.total_cost == doctest::Approx(2.0));
}

TEST_CASE("swap deltas match the realized cost change") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 6);
    const auto ds = oracles::random_dataset(n, 2, rng);
    const auto dm = DistanceMatrix::compute(ds, Metric::kEuclidean);
    std::vector<int> medoids{0, 1 + static_cast<int>(rng() % (n - 1))};
    if (medoids[0] == medoids[1]) continue;
    const double before = cost_of(dm, medoids);
    for (int slot = 0; slot < 2; ++slot) {
      for (int h = 0; h < n; ++h) {
        if (h == medoids[0] || h == medoids[1]) continue;
        const double t = pam_swap_delta(dm, medoids, medoids[slot], h);
        auto swapped = medoids;
        swapped[slot] = h;
        CHECK(cost_of(dm, swapped) - before == doctest::Approx(t).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("swap ends at a single-swap local optimum") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 6);
    const auto ds = oracles::random_dataset(n, 2, rng);
    const auto dm = DistanceMatrix::compute(ds, Metric::kEuclidean);
    const auto res = pam_swap(dm, pam_build(dm, 2));
    const double cost = cost_of(dm, res.medoids);
    CHECK(res.total_cost == doctest::Approx(cost).epsilon(1e-9));
    for (int slot = 0; slot < 2; ++slot)
      for (int h = 0; h < n; ++h) {
        if (h == res.medoids[0] || h == res.medoids[1]) continue;
        CHECK(pam_swap_delta(dm, res.medoids, res.medoids[slot], h) >= -1e-9);
        auto neighbor = res.medoids;
        neighbor[slot] = h;
        CHECK(cost_of(dm, neighbor) >= cost - 1e-9);
      }
  }
}

TEST_CASE("first and second nearest-medoid distances stay consistent") {
  std::mt19937_64 rng(29);
  const auto ds = oracles::random_dataset(12, 2, rng);
  const auto dm = DistanceMatrix::compute(ds, Metric::kEuclidean);
  const auto res = pam_swap(dm, pam_build(dm, 3));
  for (int j = 0; j < dm.size(); ++j) {
    if (std::find(res.medoids.begin(), res.medoids.end(), j) !=
        res.medoids.end())
      continue;
    std::vector<double> d;
    for (int m : res.medoids) d.push_back(dm(j, m));
    std::sort(d.begin(), d.end());
    CHECK(d[0] <= d[1]);
    CHECK(dm(j, res.medoids[res.clustering.assignment[j]]) ==
          doctest::Approx(d[0]));
  }
}

TEST_CASE("pam endpoints") {
  const auto ds = two_pairs();
  const auto all = pam(ds, 4);
  CHECK(all.total_cost == doctest::Approx(0.0));

  const auto res = pam(ds, 2);
  std::vector<int> sorted = res.medoids;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted[0] <= 1);
  CHECK(sorted[1] >= 2);
  CHECK(res.total_cost == doctest::Approx(2.0));
}

TEST_CASE("clara with the full dataset as its sample equals pam") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 10);
    const auto ds = oracles::random_dataset(n, 2, rng);
    ClaraConfig cfg;
    cfg.k = 3;
    cfg.num_samples = 1;
    cfg.sample_size = n + 5;  // clamped to n
    cfg.seed = trial;
    const auto via_clara = clara(ds, cfg);
    const auto via_pam = pam(ds, 3);
    CHECK(via_clara.medoids == via_pam.medoids);
    CHECK(via_clara.total_cost == doctest::Approx(via_pam.total_cost));
    CHECK(via_clara.clustering.assignment == via_pam.clustering.assignment);
  }
}

TEST_CASE("clara default sample size is 40 + 2k") {
  // visible through the clamp: with n > 48 and k = 4 a run must draw 48-point
  // samples; verify via determinism against an explicit 48.
  std::mt19937_64 rng(37);
  const auto ds = oracles::random_dataset(60, 2, rng);
  ClaraConfig by_default;
  by_default.k = 4;
  by_default.num_samples = 3;
  by_default.seed = 11;
  ClaraConfig explicit_size = by_default;
  explicit_size.sample_size = 48;
  const auto a = clara(ds, by_default);
  const auto b = clara(ds, explicit_size);
  CHECK(a.medoids == b.medoids);
  CHECK(a.total_cost == doctest::Approx(b.total_cost));
}

TEST_CASE("clara cost equals the minimum over candidate sets") {
  std::mt19937_64 rng(41);
  const auto ds = oracles::random_dataset(30, 2, rng);
  ClaraConfig cfg;
  cfg.k = 2;
  cfg.num_samples = 6;
  cfg.sample_size = 10;
  cfg.seed = 3;
  const auto res = clara(ds, cfg);
  // recompute the winner's full-dataset cost
  double cost = 0.0;
  for (int j = 0; j < ds.size(); ++j) {
    double best = std::numeric_limits<double>::infinity();
    for (int m : res.medoids)
      best = std::min(best,
                      distance(ds.point(j), ds.point(m), Metric::kEuclidean));
    cost += best;
  }
  CHECK(res.total_cost == doctest::Approx(cost).epsilon(1e-12));
}

TEST_CASE("medoid input validation") {
  const auto ds = two_pairs();
  const auto dm = DistanceMatrix::compute(ds, Metric::kEuclidean);
  CHECK_THROWS_AS(pam_build(dm, 0), std::invalid_argument);
  CHECK_THROWS_AS(pam_build(dm, 5), std::invalid_argument);
  CHECK_THROWS_AS(pam_swap(dm, {}), std::invalid_argument);
  CHECK_THROWS_AS(pam_swap(dm, {1, 1}), std::invalid_argument);
  ClaraConfig bad;
  bad.k = 3;
  bad.sample_size = 2;
  CHECK_THROWS_AS(clara(ds, bad), std::invalid_argument);
}
