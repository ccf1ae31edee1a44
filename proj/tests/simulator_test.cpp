#include <gtest/gtest.h>

#include <json.hpp>

#include "ctscore/distance.hpp"
#include "ctscore/simulator.hpp"
#include "test_util.hpp"

using namespace ctscore;

namespace {

// Mean within-block and cross-block distances of one simulated matrix.
std::pair<double, double> block_distances(const SimResult& r) {
  const auto d = distance_matrix(r.matrix);
  double within = 0, cross = 0;
  int nw = 0, nc = 0;
  for (std::size_t i = 0; i < d.items(); ++i) {
    for (std::size_t j = i + 1; j < d.items(); ++j) {
      if (r.truth.block_of[i] == r.truth.block_of[j]) {
        within += d(i, j);
        ++nw;
      } else {
        cross += d(i, j);
        ++nc;
      }
    }
  }
  return {within / nw, cross / nc};
}

}  // namespace

TEST(SplitMix64, ReferenceStream) {
  SplitMix64 zero(0);
  EXPECT_EQ(zero.next(), 0xe220a8397b1dcdafull);
  EXPECT_EQ(zero.next(), 0x6e789e6aa1b965f4ull);
  EXPECT_EQ(zero.next(), 0x06c45d188009454full);
  SplitMix64 r(42);
  EXPECT_EQ(r.next(), 13679457532755275413ull);
  EXPECT_EQ(r.next(), 2949826092126892291ull);
}

TEST(SplitMix64, UniformAndNormalRanges) {
  SplitMix64 r(5);
  double sum = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LE(u, 1.0);
    const double z = r.approx_normal();
    ASSERT_GE(z, -6.0);
    ASSERT_LE(z, 6.0);
    sum += z;
  }
  EXPECT_NEAR(sum / 10000, 0.0, 0.05);
}

TEST(Simulator, ZeroNoiseDuplicatesBlocks) {
  SimConfig c;
  c.examinees = 30;
  c.block_sizes = {4, 4, 4, 4, 4};
  c.flip_noise = 0.0;
  const auto r = simulate_matrix(c);
  ASSERT_EQ(r.matrix.examinees(), 30u);
  ASSERT_EQ(r.matrix.items(), 20u);
  const auto d = distance_matrix(r.matrix);
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 20; ++j)
      if (r.truth.block_of[i] == r.truth.block_of[j]) EXPECT_EQ(d.count(i, j), 0u);
  EXPECT_EQ(r.truth.block_of[0], 0u);
  EXPECT_EQ(r.truth.block_of[19], 4u);
}

TEST(Simulator, GoldenFiles) {
  SimConfig dup;
  dup.flip_noise = 0.1;
  dup.seed = 42;
  EXPECT_EQ(to_csv(simulate_matrix(dup).matrix), test_util::data_file("sim_duplicate_seed42.csv"));

  SimConfig logistic;
  logistic.model = SimModel::logistic_latent;
  logistic.examinees = 20;
  logistic.block_sizes = {3, 3, 4};
  logistic.dependence = 1.5;
  for (int i = 0; i < 10; ++i) logistic.difficulties.push_back(-1.0 + 0.25 * i);
  logistic.seed = 42;
  EXPECT_EQ(to_csv(simulate_matrix(logistic).matrix), test_util::data_file("sim_logistic_seed42.csv"));
}

TEST(Simulator, DeterministicPerSeed) {
  SimConfig c;
  c.model = SimModel::logistic_latent;
  c.seed = 1;
  EXPECT_EQ(simulate_matrix(c).matrix, simulate_matrix(c).matrix);
  c.seed = 2;
  SimConfig c1 = c;
  c1.seed = 1;
  EXPECT_NE(simulate_matrix(c).matrix, simulate_matrix(c1).matrix);
}

TEST(Simulator, NoDependenceMeansNoBlockSignal) {
  SimConfig c;
  c.model = SimModel::logistic_latent;
  c.examinees = 200;
  c.block_sizes = {5, 5, 5, 5};
  c.dependence = 0.0;
  double gap = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    c.seed = seed;
    const auto [within, cross] = block_distances(simulate_matrix(c));
    gap += within - cross;
  }
  EXPECT_NEAR(gap / 20, 0.0, 0.01);

  c.dependence = 2.0;
  gap = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    c.seed = seed;
    const auto [within, cross] = block_distances(simulate_matrix(c));
    gap += within - cross;
  }
  EXPECT_LT(gap / 20, -0.05);
}

TEST(Simulator, NoiseDegradesBlocksMonotonically) {
  SimConfig c;
  c.examinees = 60;
  double previous = -1.0;
  for (double eps : {0.0, 0.05, 0.1, 0.2, 0.3}) {
    c.flip_noise = eps;
    double within = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      c.seed = seed;
      within += block_distances(simulate_matrix(c)).first;
    }
    EXPECT_GT(within, previous) << eps;
    previous = within;
  }
}

TEST(Simulator, InvalidConfigs) {
  SimConfig c;
  c.examinees = 1;
  EXPECT_THROW(simulate_matrix(c), std::invalid_argument);
  c = {};
  c.block_sizes = {};
  EXPECT_THROW(simulate_matrix(c), std::invalid_argument);
  c = {};
  c.block_sizes = {1};
  EXPECT_THROW(simulate_matrix(c), std::invalid_argument);
  c = {};
  c.block_sizes = {2, 0};
  EXPECT_THROW(simulate_matrix(c), std::invalid_argument);
  c = {};
  c.flip_noise = 0.6;
  EXPECT_THROW(simulate_matrix(c), std::invalid_argument);
  c = {};
  c.base_p = {1.0};
  EXPECT_THROW(simulate_matrix(c), std::invalid_argument);
  c = {};
  c.base_p = {0.5, 0.5};
  EXPECT_THROW(simulate_matrix(c), std::invalid_argument);
  c = {};
  c.model = SimModel::logistic_latent;
  c.dependence = -1.0;
  EXPECT_THROW(simulate_matrix(c), std::invalid_argument);
  c.dependence = 1.0;
  c.difficulties = {0.0};
  EXPECT_THROW(simulate_matrix(c), std::invalid_argument);
}

TEST(Simulator, TruthSidecar) {
  SimConfig c;
  c.block_sizes = {2, 3};
  const auto r = simulate_matrix(c);
  const auto doc = nlohmann::json::parse(truth_json(r));
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["block_of"].size(), 5u);
  EXPECT_EQ(doc["block_of"]["i2"], 0);
  EXPECT_EQ(doc["block_of"]["i3"], 1);
}
