#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ctscore/distance.hpp"

namespace ctscore {

/// neighborhood: k_i = 1 + #{j != i : d_ij < a_crit}, membership need not be
/// transitive. partition: connected components of the strict threshold graph.
enum class WeightMode { neighborhood, partition };

std::string_view to_string(WeightMode mode);
WeightMode parse_weight_mode(std::string_view text);

/// Per-item cluster sizes (self included) and weights w_i = 1/k_i.
struct WeightAssignment {
  double a_crit = 0.0;
  WeightMode mode = WeightMode::neighborhood;
  std::vector<std::uint32_t> k;
  std::vector<double> w;
  double sum_w = 0.0;
  std::size_t singleton_count = 0;

  std::size_t items() const { return k.size(); }
};

/// Fills w, sum_w and singleton_count from k. sum_w is accumulated per
/// distinct cluster size, so it is exact whenever each size's item count is
/// a multiple of that size.
WeightAssignment make_assignment(double a_crit, WeightMode mode, std::vector<std::uint32_t> k);

/// Strict threshold test on an integer mismatch count: count/m < a_crit.
/// The 1e-9 guard keeps k/m grid points from flipping on rounding of a_crit*m.
inline bool below_threshold(std::uint32_t count, std::size_t m, double a_crit) {
  return static_cast<double>(count) < a_crit * static_cast<double>(m) - 1e-9;
}

/// OpenMP kernel, one item per iteration.
WeightAssignment neighborhood_weights(const DistanceMatrix& d, double a_crit);

struct Partition {
  std::vector<std::size_t> cluster_of;
  /// Members ascending; clusters ordered by smallest member.
  std::vector<std::vector<std::size_t>> clusters;
};

Partition partition_clusters(const DistanceMatrix& d, double a_crit);

WeightAssignment partition_weights(const Partition& p, double a_crit = 0.0);

/// Dispatches on mode.
WeightAssignment assign_weights(const DistanceMatrix& d, double a_crit, WeightMode mode);

struct WeightSummary {
  double sum_w = 0.0;
  std::size_t singleton_count = 0;
  double avg_items_per_cluster = 0.0;
};

WeightSummary weight_summary(const WeightAssignment& wa, std::size_t n);

}  // namespace ctscore
