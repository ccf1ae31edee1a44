#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctscore/response_matrix.hpp"
#include "ctscore/scoring.hpp"
#include "ctscore/sweep.hpp"
#include "ctscore/weighting.hpp"

namespace ctscore {

inline constexpr int kReportSchemaVersion = 1;

struct AnalysisConfig {
  WeightMode mode = WeightMode::neighborhood;
  SdMode sd_mode = SdMode::population;
  DifficultyBand band;
  ThresholdStrategy strategy = ThresholdStrategy::exact;
  double grid_step = 0.01;
  /// Fixed threshold; when empty the threshold is chosen by sweep.
  std::optional<double> a_crit;
};

struct ItemRow {
  std::string id;
  double p = 0.0;
  DifficultyFlag flag = DifficultyFlag::ok;
  std::uint32_t k = 1;
  double w = 1.0;
  bool singleton = true;
};

struct ExamineeRow {
  std::string id;
  double classical = 0.0;
  double weighted = 0.0;
};

struct AnalysisReport {
  AnalysisConfig config;
  std::size_t examinees = 0;
  std::size_t items = 0;
  std::size_t imputed_cells = 0;
  double a_crit = 0.0;  // threshold used for the item/examinee tables
  std::vector<ItemRow> item_rows;
  std::vector<ExamineeRow> examinee_rows;
  ScoreStats summary_classical;
  ScoreStats summary_weighted;
  WeightSummary weighting;
  SweepTable sweep;
  std::optional<SweepRow> best;
};

/// Runs the whole pipeline. In sweep mode the tables use the selected
/// threshold; throws SelectionError when no row can be selected.
AnalysisReport analyze(const ResponseMatrix& matrix, const AnalysisConfig& config);

/// Top-level keys: schema_version, config, items, examinees,
/// summary_classical, summary_weighted, sweep, best. Undefined cv is null.
std::string report_json(const AnalysisReport& report);

std::string items_csv(const AnalysisReport& report);
std::string examinees_csv(const AnalysisReport& report);
std::string summary_csv(const AnalysisReport& report);
std::string sweep_csv(const SweepTable& table);

}  // namespace ctscore
