#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ctscore/distance.hpp"
#include "ctscore/response_matrix.hpp"
#include "ctscore/scoring.hpp"
#include "ctscore/weighting.hpp"

namespace ctscore {

enum class ThresholdStrategy { exact, grid };

std::string_view to_string(ThresholdStrategy strategy);

/// exact: distinct off-diagonal distances u_1 < ... < u_L plus u_L + 1/(2m).
/// Under the strict test, u_k admits exactly the distances <= u_{k-1}, so
/// every distinct neighborhood structure appears once.
/// grid: step, 2*step, ..., 1, then 1 + 1/(2m).
std::vector<double> candidate_thresholds(const DistanceMatrix& d,
                                         ThresholdStrategy strategy = ThresholdStrategy::exact,
                                         double grid_step = 0.01);

struct SweepRow {
  double a_crit = 0.0;
  WeightMode mode = WeightMode::neighborhood;
  double mean = 0.0;
  double sd = 0.0;
  std::optional<double> cv;
  double sum_w = 0.0;
  std::size_t singleton_count = 0;
  double avg_items_per_cluster = 0.0;
  /// Every item is its own cluster, so the row reproduces classical scoring.
  bool baseline = false;

  /// Selectable rows have a defined cv and aggregate at least one item.
  bool eligible() const { return cv.has_value() && !baseline; }

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  std::optional<std::size_t> best_index;

  friend bool operator==(const SweepTable&, const SweepTable&) = default;
};

class SelectionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Full pipeline (weights, weighted scores, stats, summary) at one threshold.
SweepRow evaluate_threshold(const ResponseMatrix& matrix, const DistanceMatrix& d, double a_crit,
                            WeightMode mode, SdMode sd_mode);

/// Rows are evaluated in parallel and merged in threshold order.
SweepTable run_sweep(const ResponseMatrix& matrix, const DistanceMatrix& d,
                     const std::vector<double>& thresholds, WeightMode mode, SdMode sd_mode);

SweepTable run_sweep(const ResponseMatrix& matrix, const std::vector<double>& thresholds,
                     WeightMode mode = WeightMode::neighborhood,
                     SdMode sd_mode = SdMode::population);

/// Index of the eligible row with maximal cv; rows within tolerance of the
/// maximum resolve to the smallest a_crit.
std::optional<std::size_t> best_row_index(const std::vector<SweepRow>& rows,
                                          double tolerance = 1e-12);

/// Throws SelectionError when no row is eligible.
SweepRow select_best(const SweepTable& table, double tolerance = 1e-12);

}  // namespace ctscore
