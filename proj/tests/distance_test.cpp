#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ctscore/distance.hpp"
#include "oracle.hpp"

using namespace ctscore;

namespace {

ItemVector vec(std::vector<std::uint8_t> values) { return {"x", std::move(values)}; }

}  // namespace

TEST(ItemDistance, WorkedExample) {
  const auto u = vec({1, 1, 0, 1, 1, 0, 0, 0, 0, 0});
  const auto v = vec({1, 0, 1, 1, 1, 0, 1, 0, 0, 0});
  EXPECT_EQ(mismatch_count(u, v), 3u);
  EXPECT_EQ(item_distance(u, v), 0.3);
}

TEST(ItemDistance, IdentityAndComplement) {
  const auto v = vec({1, 0, 1, 1});
  EXPECT_EQ(item_distance(v, v), 0.0);
  EXPECT_EQ(item_distance(vec({1, 1, 1}), vec({0, 0, 0})), 1.0);
}

TEST(ItemDistance, LengthMismatchThrows) {
  EXPECT_THROW(item_distance(vec({1, 0}), vec({1, 0, 1})), DataError);
  EXPECT_THROW(item_distance(vec({}), vec({})), DataError);
}

TEST(DistanceMatrix, WorkedExampleColumns) {
  const auto m = ResponseMatrix::from_rows(
      {{1, 1}, {1, 0}, {0, 1}, {1, 1}, {1, 1}, {0, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}});
  const auto d = distance_matrix(m);
  EXPECT_EQ(d(0, 1), 0.3);
  EXPECT_EQ(d(1, 0), 0.3);
  EXPECT_EQ(d(0, 0), 0.0);
  EXPECT_EQ(d(1, 1), 0.0);
}

TEST(DistanceMatrix, IdenticalColumnsAllZero) {
  const auto m = ResponseMatrix::from_rows({{1, 1, 1}, {0, 0, 0}, {1, 1, 1}});
  const auto d = distance_matrix(m);
  for (auto c : d.counts()) EXPECT_EQ(c, 0u);
  EXPECT_FALSE(d.min_positive_count().has_value());
}

TEST(DistanceMatrix, MatchesPairwiseRecount) {
  std::mt19937_64 rng(2024);
  const auto g = oracle::random_grid(rng, 6, 5);
  const auto d = distance_matrix(ResponseMatrix::from_rows(g));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(d(i, j), oracle::distance(g, i, j)) << i << "," << j;
}

TEST(DistanceMatrix, WideCohortCrossesWordBoundary) {
  std::mt19937_64 rng(5);
  const auto g = oracle::random_grid(rng, 130, 7);
  const auto d = distance_matrix(ResponseMatrix::from_rows(g));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(d(i, j), oracle::distance(g, i, j));
}

TEST(DistanceMatrix, MetricAxiomsProperty) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + rng() % 12;
    const auto g = oracle::random_grid(rng, std::max<std::size_t>(m, 2), 6);
    const auto d = distance_matrix(ResponseMatrix::from_rows(g));
    const double mm = static_cast<double>(d.examinees());
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        EXPECT_EQ(d.count(i, j), d.count(j, i));
        EXPECT_GE(d(i, j), 0.0);
        EXPECT_LE(d(i, j), 1.0);
        EXPECT_EQ(d(i, j) * mm, static_cast<double>(d.count(i, j)));
        bool same = true;
        for (const auto& row : g) same = same && row[i] == row[j];
        EXPECT_EQ(d.count(i, j) == 0, same);
        for (std::size_t k = 0; k < 6; ++k) EXPECT_LE(d.count(i, k), d.count(i, j) + d.count(j, k));
      }
    }
  }
}

TEST(DistanceMatrix, PermutationProperties) {
  std::mt19937_64 rng(3);
  auto g = oracle::random_grid(rng, 8, 6);
  const auto d = distance_matrix(ResponseMatrix::from_rows(g));

  auto shuffled_rows = g;
  std::shuffle(shuffled_rows.begin(), shuffled_rows.end(), rng);
  EXPECT_EQ(distance_matrix(ResponseMatrix::from_rows(shuffled_rows)), d);

  std::vector<std::size_t> perm(6);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto permuted = g;
  for (std::size_t e = 0; e < g.size(); ++e)
    for (std::size_t j = 0; j < 6; ++j) permuted[e][j] = g[e][perm[j]];
  const auto dp = distance_matrix(ResponseMatrix::from_rows(permuted));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(dp.count(i, j), d.count(perm[i], perm[j]));
}

TEST(DistanceMatrix, CsvDump) {
  const auto m = ResponseMatrix::from_rows({{1, 0}, {1, 1}});
  EXPECT_EQ(distance_csv(distance_matrix(m), m.item_ids()), "id,i1,i2\ni1,0,0.5\ni2,0.5,0\n");
}
