#include "ctscore/reference.hpp"

namespace ctscore::serial {

DistanceMatrix distance_matrix(const ResponseMatrix& matrix) {
  const std::size_t n = matrix.items();
  std::vector<std::uint32_t> counts(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t c = 0;
      for (std::size_t e = 0; e < matrix.examinees(); ++e) c += matrix.at(e, i) != matrix.at(e, j);
      counts[i * n + j] = c;
    }
  }
  return DistanceMatrix(n, matrix.examinees(), std::move(counts));
}

WeightAssignment neighborhood_weights(const DistanceMatrix& d, double a_crit) {
  std::vector<std::uint32_t> k(d.items(), 1);
  for (std::size_t i = 0; i < d.items(); ++i)
    for (std::size_t j = 0; j < d.items(); ++j)
      if (i != j && below_threshold(d.count(i, j), d.examinees(), a_crit)) ++k[i];
  return make_assignment(a_crit, WeightMode::neighborhood, std::move(k));
}

SweepTable run_sweep(const ResponseMatrix& matrix, const DistanceMatrix& d,
                     const std::vector<double>& thresholds, WeightMode mode, SdMode sd_mode) {
  SweepTable table;
  for (double t : thresholds) {
    if (mode == WeightMode::neighborhood) {
      const auto wa = serial::neighborhood_weights(d, t);
      const auto stats = score_stats(weighted_scores(matrix, wa), sd_mode);
      const auto summary = weight_summary(wa, matrix.items());
      table.rows.push_back({t, mode, stats.mean, stats.sd, stats.cv, summary.sum_w,
                            summary.singleton_count, summary.avg_items_per_cluster,
                            summary.singleton_count == matrix.items()});
    } else {
      table.rows.push_back(evaluate_threshold(matrix, d, t, mode, sd_mode));
    }
  }
  table.best_index = best_row_index(table.rows);
  return table;
}

}  // namespace ctscore::serial
