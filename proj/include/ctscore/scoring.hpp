#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ctscore/response_matrix.hpp"
#include "ctscore/weighting.hpp"

namespace ctscore {

enum class ScoreKind { classical, weighted };

struct ScoreVector {
  std::vector<double> scores;
  ScoreKind kind = ScoreKind::classical;
};

/// Row sums: one point per correctly restored gap.
ScoreVector classical_scores(const ResponseMatrix& matrix);

/// Sum of item weights over the items an examinee got right.
ScoreVector weighted_scores(const ResponseMatrix& matrix, const WeightAssignment& wa);

enum class SdMode { population, sample };

std::string_view to_string(SdMode mode);
SdMode parse_sd_mode(std::string_view text);

struct ScoreStats {
  double mean = 0.0;
  double sd = 0.0;
  std::optional<double> cv;  // empty when mean <= 0
  SdMode sd_mode = SdMode::population;
};

/// sd / mean, undefined unless mean > 0.
std::optional<double> coefficient_of_variation(double mean, double sd);

/// Requires at least two scores.
ScoreStats score_stats(const ScoreVector& scores, SdMode sd_mode = SdMode::population);

enum class DifficultyFlag { ok, too_easy, too_hard };

std::string_view to_string(DifficultyFlag flag);

struct DifficultyBand {
  double low = 0.30;
  double high = 0.85;
};

struct ItemDifficultyReport {
  std::vector<double> p;
  DifficultyBand band;
  std::vector<DifficultyFlag> flags;
};

ItemDifficultyReport item_difficulties(const ResponseMatrix& matrix, DifficultyBand band = {});

/// Pearson r between item columns; zero-variance pairs are left empty.
struct CorrelationGrid {
  std::size_t items = 0;
  std::vector<std::optional<double>> r;

  const std::optional<double>& operator()(std::size_t i, std::size_t j) const {
    return r[i * items + j];
  }
};

CorrelationGrid interitem_pearson(const ResponseMatrix& matrix);

}  // namespace ctscore
