#include "ctscore/sweep.hpp"

#include <cmath>

namespace ctscore {

std::string_view to_string(ThresholdStrategy strategy) {
  return strategy == ThresholdStrategy::exact ? "exact" : "grid";
}

std::vector<double> candidate_thresholds(const DistanceMatrix& d, ThresholdStrategy strategy,
                                         double grid_step) {
  if (d.items() < 2) throw DataError("threshold candidates need at least 2 items");
  const double m = static_cast<double>(d.examinees());
  const double half_step = 1.0 / (2.0 * m);
  std::vector<double> out;

  if (strategy == ThresholdStrategy::exact) {
    const auto counts = d.distinct_counts();
    for (auto c : counts) out.push_back(static_cast<double>(c) / m);
    out.push_back(static_cast<double>(counts.back()) / m + half_step);
    return out;
  }

  if (!(grid_step > 0.0) || grid_step > 1.0) {
    throw std::invalid_argument("grid step must lie in (0, 1]");
  }
  const auto steps = static_cast<std::size_t>(std::floor(1.0 / grid_step + 1e-9));
  for (std::size_t s = 1; s <= steps; ++s) out.push_back(static_cast<double>(s) * grid_step);
  out.push_back(1.0 + half_step);
  return out;
}

SweepRow evaluate_threshold(const ResponseMatrix& matrix, const DistanceMatrix& d, double a_crit,
                            WeightMode mode, SdMode sd_mode) {
  const auto wa = assign_weights(d, a_crit, mode);
  const auto stats = score_stats(weighted_scores(matrix, wa), sd_mode);
  const auto summary = weight_summary(wa, matrix.items());
  SweepRow row;
  row.a_crit = a_crit;
  row.mode = mode;
  row.mean = stats.mean;
  row.sd = stats.sd;
  row.cv = stats.cv;
  row.sum_w = summary.sum_w;
  row.singleton_count = summary.singleton_count;
  row.avg_items_per_cluster = summary.avg_items_per_cluster;
  row.baseline = summary.singleton_count == matrix.items();
  return row;
}

SweepTable run_sweep(const ResponseMatrix& matrix, const DistanceMatrix& d,
                     const std::vector<double>& thresholds, WeightMode mode, SdMode sd_mode) {
  if (thresholds.empty()) throw std::invalid_argument("threshold list is empty");
  for (std::size_t t = 1; t < thresholds.size(); ++t) {
    if (!(thresholds[t - 1] < thresholds[t])) {
      throw std::invalid_argument("thresholds must be strictly increasing");
    }
  }

  if (d.items() != matrix.items() || d.examinees() != matrix.examinees()) {
    throw DataError("distance matrix does not match response matrix dimensions");
  }

  SweepTable table;
  table.rows.resize(thresholds.size());
  const auto count = static_cast<std::ptrdiff_t>(thresholds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    table.rows[t] = evaluate_threshold(matrix, d, thresholds[t], mode, sd_mode);
  }
  table.best_index = best_row_index(table.rows);
  return table;
}

SweepTable run_sweep(const ResponseMatrix& matrix, const std::vector<double>& thresholds,
                     WeightMode mode, SdMode sd_mode) {
  return run_sweep(matrix, distance_matrix(matrix), thresholds, mode, sd_mode);
}

std::optional<std::size_t> best_row_index(const std::vector<SweepRow>& rows, double tolerance) {
  std::optional<double> max_cv;
  for (const auto& row : rows)
    if (row.eligible() && (!max_cv || *row.cv > *max_cv)) max_cv = row.cv;
  if (!max_cv) return std::nullopt;

  std::optional<std::size_t> best;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (!row.eligible() || *max_cv - *row.cv > tolerance) continue;
    if (!best || row.a_crit < rows[*best].a_crit) best = r;
  }
  return best;
}

SweepRow select_best(const SweepTable& table, double tolerance) {
  const auto index = best_row_index(table.rows, tolerance);
  if (!index) throw SelectionError("no sweep row has a defined coefficient of variation");
  return table.rows[*index];
}

}  // namespace ctscore
