#include "ctscore/scoring.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ctscore {

ScoreVector classical_scores(const ResponseMatrix& matrix) {
  ScoreVector out{std::vector<double>(matrix.examinees(), 0.0), ScoreKind::classical};
  for (std::size_t e = 0; e < matrix.examinees(); ++e) {
    std::size_t total = 0;
    for (auto cell : matrix.row(e)) total += cell;
    out.scores[e] = static_cast<double>(total);
  }
  return out;
}

ScoreVector weighted_scores(const ResponseMatrix& matrix, const WeightAssignment& wa) {
  if (wa.w.size() != matrix.items()) {
    throw DataError("weight count " + std::to_string(wa.w.size()) + " does not match item count " +
                    std::to_string(matrix.items()));
  }
  ScoreVector out{std::vector<double>(matrix.examinees(), 0.0), ScoreKind::weighted};
  for (std::size_t e = 0; e < matrix.examinees(); ++e) {
    const auto row = matrix.row(e);
    double total = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i]) total += wa.w[i];
    out.scores[e] = total;
  }
  return out;
}

std::string_view to_string(SdMode mode) {
  return mode == SdMode::population ? "population" : "sample";
}

SdMode parse_sd_mode(std::string_view text) {
  if (text == "population") return SdMode::population;
  if (text == "sample") return SdMode::sample;
  throw std::invalid_argument("unknown sd mode '" + std::string(text) + "'");
}

std::optional<double> coefficient_of_variation(double mean, double sd) {
  if (!(mean > 0.0)) return std::nullopt;
  return sd / mean;
}

ScoreStats score_stats(const ScoreVector& scores, SdMode sd_mode) {
  const auto& x = scores.scores;
  if (x.size() < 2) throw DataError("score statistics need at least 2 examinees");
  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / static_cast<double>(x.size());
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double denom = static_cast<double>(sd_mode == SdMode::population ? x.size() : x.size() - 1);
  const double sd = std::sqrt(ss / denom);
  return {mean, sd, coefficient_of_variation(mean, sd), sd_mode};
}

std::string_view to_string(DifficultyFlag flag) {
  switch (flag) {
    case DifficultyFlag::too_easy: return "too_easy";
    case DifficultyFlag::too_hard: return "too_hard";
    default: return "ok";
  }
}

ItemDifficultyReport item_difficulties(const ResponseMatrix& matrix, DifficultyBand band) {
  if (!(band.low <= band.high)) throw std::invalid_argument("difficulty band has low > high");
  ItemDifficultyReport report;
  report.band = band;
  const std::size_t m = matrix.examinees();
  for (std::size_t i = 0; i < matrix.items(); ++i) {
    std::size_t correct = 0;
    for (std::size_t e = 0; e < m; ++e) correct += matrix.at(e, i);
    const double p = static_cast<double>(correct) / static_cast<double>(m);
    report.p.push_back(p);
    report.flags.push_back(p > band.high  ? DifficultyFlag::too_easy
                           : p < band.low ? DifficultyFlag::too_hard
                                          : DifficultyFlag::ok);
  }
  return report;
}

CorrelationGrid interitem_pearson(const ResponseMatrix& matrix) {
  const std::size_t m = matrix.examinees();
  const std::size_t n = matrix.items();
  std::vector<double> mean(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e = 0; e < m; ++e) mean[i] += matrix.at(e, i);
    mean[i] /= static_cast<double>(m);
  }
  CorrelationGrid grid{n, std::vector<std::optional<double>>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double sxy = 0.0, sxx = 0.0, syy = 0.0;
      for (std::size_t e = 0; e < m; ++e) {
        const double dx = matrix.at(e, i) - mean[i];
        const double dy = matrix.at(e, j) - mean[j];
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
      }
      if (sxx == 0.0 || syy == 0.0) continue;
      const double r = i == j ? 1.0 : sxy / std::sqrt(sxx * syy);
      grid.r[i * n + j] = r;
      grid.r[j * n + i] = r;
    }
  }
  return grid;
}

}  // namespace ctscore
