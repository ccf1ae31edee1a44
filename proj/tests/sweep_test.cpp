#include <gtest/gtest.h>

#include <random>

#include "ctscore/simulator.hpp"
#include "ctscore/sweep.hpp"
#include "oracle.hpp"

using namespace ctscore;

namespace {

SweepRow row_with(double a_crit, std::optional<double> cv) {
  SweepRow r;
  r.a_crit = a_crit;
  r.cv = cv;
  return r;
}

ResponseMatrix duplicate_fixture(std::uint64_t seed = 42) {
  SimConfig c;
  c.examinees = 30;
  c.block_sizes = {4, 4, 4, 4, 4};
  c.flip_noise = 0.0;
  c.seed = seed;
  return simulate_matrix(c).matrix;
}

}  // namespace

TEST(CandidateThresholds, ExactFromDistinctDistances) {
  const DistanceMatrix d(3, 10, {0, 1, 2, 1, 0, 4, 2, 4, 0});
  const auto t = candidate_thresholds(d);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t[0], 0.1);
  EXPECT_EQ(t[1], 0.2);
  EXPECT_EQ(t[2], 0.4);
  EXPECT_DOUBLE_EQ(t[3], 0.45);
}

TEST(CandidateThresholds, AllIdenticalItems) {
  const auto d = distance_matrix(ResponseMatrix::from_rows({{1, 1, 1}, {0, 0, 0}, {1, 1, 1}, {0, 0, 0}}));
  const auto t = candidate_thresholds(d);
  EXPECT_EQ(t, (std::vector<double>{0.0, 1.0 / 8.0}));
}

TEST(CandidateThresholds, Grid) {
  const DistanceMatrix d(2, 2, {0, 1, 1, 0});
  EXPECT_EQ(candidate_thresholds(d, ThresholdStrategy::grid, 0.25),
            (std::vector<double>{0.25, 0.5, 0.75, 1.0, 1.25}));
  const auto fine = candidate_thresholds(d, ThresholdStrategy::grid);
  EXPECT_EQ(fine.size(), 101u);
  EXPECT_DOUBLE_EQ(fine[99], 1.0);
  EXPECT_THROW(candidate_thresholds(d, ThresholdStrategy::grid, 0.0), std::invalid_argument);
}

TEST(RunSweep, ZeroRowReproducesClassical) {
  std::mt19937_64 rng(1);
  const auto m = ResponseMatrix::from_rows(oracle::random_grid(rng, 12, 9));
  auto thresholds = candidate_thresholds(distance_matrix(m));
  if (thresholds.front() != 0.0) thresholds.insert(thresholds.begin(), 0.0);
  const auto table = run_sweep(m, thresholds);
  const auto classical = score_stats(classical_scores(m));
  EXPECT_EQ(table.rows[0].mean, classical.mean);
  EXPECT_EQ(table.rows[0].sd, classical.sd);
  EXPECT_EQ(table.rows[0].cv, classical.cv);
  EXPECT_EQ(table.rows[0].sum_w, 9.0);
  EXPECT_TRUE(table.rows[0].baseline);
}

TEST(RunSweep, MatchesFullPipelineOracle) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = oracle::random_grid(rng, 6, 4);
    const auto m = ResponseMatrix::from_rows(g);
    const auto thresholds = candidate_thresholds(distance_matrix(m));
    const auto table = run_sweep(m, thresholds);
    ASSERT_EQ(table.rows.size(), thresholds.size());
    for (std::size_t r = 0; r < thresholds.size(); ++r) {
      const auto k = oracle::neighborhood_sizes(g, thresholds[r]);
      std::vector<double> w;
      double sum_w = 0.0;
      std::size_t singles = 0;
      for (auto size : k) {
        w.push_back(1.0 / size);
        sum_w += 1.0 / size;
        singles += size == 1;
      }
      const auto stats = oracle::weighted_stats(g, w);
      const auto& row = table.rows[r];
      EXPECT_NEAR(row.mean, stats.mean, 1e-12);
      EXPECT_NEAR(row.sd, stats.sd, 1e-12);
      if (stats.mean > 0) EXPECT_NEAR(*row.cv, stats.sd / stats.mean, 1e-12);
      EXPECT_NEAR(row.sum_w, sum_w, 1e-12);
      EXPECT_EQ(row.singleton_count, singles);
      EXPECT_NEAR(row.avg_items_per_cluster, 4.0 / sum_w, 1e-12);
    }
  }
}

TEST(RunSweep, DuplicateBlocksPlateau) {
  const auto m = duplicate_fixture();
  const auto d = distance_matrix(m);
  const double min_cross = static_cast<double>(*d.min_positive_count()) / d.examinees();
  std::vector<double> plateau;
  for (double t = 0.005; t < min_cross; t += 0.005) plateau.push_back(t);
  plateau.push_back(min_cross);
  for (auto mode : {WeightMode::neighborhood, WeightMode::partition}) {
    const auto table = run_sweep(m, plateau, mode);
    for (const auto& row : table.rows) {
      EXPECT_EQ(row.sum_w, 5.0) << row.a_crit;
      EXPECT_EQ(row.singleton_count, 0u);
    }
  }
}

TEST(RunSweep, RejectsBadThresholdLists) {
  const auto m = duplicate_fixture();
  EXPECT_THROW(run_sweep(m, {}), std::invalid_argument);
  EXPECT_THROW(run_sweep(m, {0.2, 0.1}), std::invalid_argument);
  EXPECT_THROW(run_sweep(m, {0.1, 0.1}), std::invalid_argument);
}

TEST(RunSweep, ExactStrategyIsComplete) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> any_t(0.0, 1.2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = ResponseMatrix::from_rows(oracle::random_grid(rng, 7, 6));
    const auto d = distance_matrix(m);
    const auto thresholds = candidate_thresholds(d);
    std::vector<std::vector<std::uint32_t>> structures;
    for (double t : thresholds) structures.push_back(neighborhood_weights(d, t).k);
    for (int s = 0; s < 50; ++s) {
      const auto k = neighborhood_weights(d, any_t(rng)).k;
      EXPECT_NE(std::find(structures.begin(), structures.end(), k), structures.end());
    }
    // and t = 0 itself
    const auto k0 = neighborhood_weights(d, 0.0).k;
    EXPECT_NE(std::find(structures.begin(), structures.end(), k0), structures.end());
  }
}

TEST(RunSweep, SumOfWeightsNonIncreasing) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = ResponseMatrix::from_rows(oracle::random_grid(rng, 10, 12));
    const auto table = run_sweep(m, candidate_thresholds(distance_matrix(m)));
    for (std::size_t r = 1; r < table.rows.size(); ++r) {
      EXPECT_LE(table.rows[r].sum_w, table.rows[r - 1].sum_w);
    }
    EXPECT_EQ(table.rows.back().sum_w, 1.0);
  }
}

TEST(SelectBest, PicksMaximalCv) {
  SweepTable t;
  t.rows = {row_with(0.1, 0.241), row_with(0.25, 0.352), row_with(0.3, 0.300)};
  EXPECT_EQ(select_best(t).a_crit, 0.25);
}

TEST(SelectBest, SingleRow) {
  SweepTable t;
  t.rows = {row_with(0.4, 0.2)};
  EXPECT_EQ(select_best(t).a_crit, 0.4);
}

TEST(SelectBest, TieGoesToSmallerThreshold) {
  SweepTable t;
  t.rows = {row_with(0.1, 0.2), row_with(0.2, 0.3), row_with(0.3, 0.3 + 1e-14)};
  EXPECT_EQ(select_best(t).a_crit, 0.2);
  t.rows[2].cv = 0.3 + 1e-9;
  EXPECT_EQ(select_best(t).a_crit, 0.3);
}

TEST(SelectBest, SkipsUndefinedAndBaselineRows) {
  SweepTable t;
  auto baseline = row_with(0.0, 0.9);
  baseline.baseline = true;
  t.rows = {baseline, row_with(0.1, std::nullopt), row_with(0.2, 0.5)};
  EXPECT_EQ(select_best(t).a_crit, 0.2);

  SweepTable none;
  none.rows = {row_with(0.1, std::nullopt)};
  EXPECT_THROW(select_best(none), SelectionError);
}

TEST(SelectBest, AllZeroMatrixHasNoSelection) {
  const auto m = ResponseMatrix::from_rows({{0, 0, 0}, {0, 0, 0}});
  const auto table = run_sweep(m, candidate_thresholds(distance_matrix(m)));
  EXPECT_FALSE(table.best_index.has_value());
  EXPECT_THROW(select_best(table), SelectionError);
}
