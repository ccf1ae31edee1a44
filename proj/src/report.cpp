#include "ctscore/report.hpp"

#include <json.hpp>

#include "ctscore/distance.hpp"
#include "ctscore/format.hpp"

namespace ctscore {
namespace {

using Json = nlohmann::ordered_json;

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string csv_number(const std::optional<double>& v) { return v ? format_number(*v) : "NA"; }

Json row_json(const SweepRow& row) {
  Json j;
  j["a_crit"] = row.a_crit;
  j["mode"] = to_string(row.mode);
  j["mean"] = row.mean;
  j["sd"] = row.sd;
  j["cv"] = optional_number(row.cv);
  j["sum_w"] = row.sum_w;
  j["singleton_count"] = row.singleton_count;
  j["avg_items_per_cluster"] = row.avg_items_per_cluster;
  j["baseline"] = row.baseline;
  return j;
}

Json stats_json(const ScoreStats& s) {
  Json j;
  j["mean"] = s.mean;
  j["sd"] = s.sd;
  j["cv"] = optional_number(s.cv);
  j["sd_mode"] = to_string(s.sd_mode);
  return j;
}

}  // namespace

AnalysisReport analyze(const ResponseMatrix& matrix, const AnalysisConfig& config) {
  AnalysisReport report;
  report.config = config;
  report.examinees = matrix.examinees();
  report.items = matrix.items();
  report.imputed_cells = matrix.imputed_cells();

  const auto d = distance_matrix(matrix);
  if (config.a_crit) {
    report.a_crit = *config.a_crit;
  } else {
    report.sweep = run_sweep(matrix, d, candidate_thresholds(d, config.strategy, config.grid_step),
                             config.mode, config.sd_mode);
    report.best = select_best(report.sweep);
    report.a_crit = report.best->a_crit;
  }

  const auto wa = assign_weights(d, report.a_crit, config.mode);
  const auto difficulty = item_difficulties(matrix, config.band);
  const auto classical = classical_scores(matrix);
  const auto weighted = weighted_scores(matrix, wa);

  for (std::size_t i = 0; i < matrix.items(); ++i) {
    report.item_rows.push_back({matrix.item_ids()[i], difficulty.p[i], difficulty.flags[i], wa.k[i],
                                wa.w[i], wa.k[i] == 1});
  }
  for (std::size_t e = 0; e < matrix.examinees(); ++e) {
    report.examinee_rows.push_back(
        {matrix.examinee_ids()[e], classical.scores[e], weighted.scores[e]});
  }
  report.summary_classical = score_stats(classical, config.sd_mode);
  report.summary_weighted = score_stats(weighted, config.sd_mode);
  report.weighting = weight_summary(wa, matrix.items());
  return report;
}

std::string report_json(const AnalysisReport& report) {
  Json doc;
  doc["schema_version"] = kReportSchemaVersion;

  Json config;
  config["mode"] = to_string(report.config.mode);
  config["sd_mode"] = to_string(report.config.sd_mode);
  config["band"] = Json::array({report.config.band.low, report.config.band.high});
  config["thresholds"] = report.config.a_crit ? "fixed" : to_string(report.config.strategy);
  config["grid_step"] = report.config.grid_step;
  config["a_crit"] = optional_number(report.config.a_crit);
  config["examinees"] = report.examinees;
  config["items"] = report.items;
  config["imputed_cells"] = report.imputed_cells;
  doc["config"] = std::move(config);

  Json items = Json::array();
  for (const auto& row : report.item_rows) {
    Json j;
    j["id"] = row.id;
    j["p"] = row.p;
    j["flag"] = to_string(row.flag);
    j["k"] = row.k;
    j["w"] = row.w;
    j["singleton"] = row.singleton;
    items.push_back(std::move(j));
  }
  doc["items"] = std::move(items);

  Json examinees = Json::array();
  for (const auto& row : report.examinee_rows) {
    Json j;
    j["id"] = row.id;
    j["classical"] = row.classical;
    j["weighted"] = row.weighted;
    examinees.push_back(std::move(j));
  }
  doc["examinees"] = std::move(examinees);

  Json classical = stats_json(report.summary_classical);
  classical["items"] = report.items;
  doc["summary_classical"] = std::move(classical);

  Json weighted = stats_json(report.summary_weighted);
  weighted["a_crit"] = report.a_crit;
  weighted["mode"] = to_string(report.config.mode);
  weighted["sum_w"] = report.weighting.sum_w;
  weighted["singleton_count"] = report.weighting.singleton_count;
  weighted["avg_items_per_cluster"] = report.weighting.avg_items_per_cluster;
  doc["summary_weighted"] = std::move(weighted);

  Json sweep = Json::array();
  for (const auto& row : report.sweep.rows) sweep.push_back(row_json(row));
  doc["sweep"] = std::move(sweep);
  doc["best"] = report.best ? row_json(*report.best) : Json(nullptr);

  return doc.dump(2) + "\n";
}

std::string items_csv(const AnalysisReport& report) {
  std::string out = "id,p,flag,k,w,singleton\n";
  for (const auto& row : report.item_rows) {
    out += row.id + ',' + format_number(row.p) + ',' + std::string(to_string(row.flag)) + ',' +
           std::to_string(row.k) + ',' + format_number(row.w) + ',' +
           (row.singleton ? "1" : "0") + '\n';
  }
  return out;
}

std::string examinees_csv(const AnalysisReport& report) {
  std::string out = "id,classical,weighted\n";
  for (const auto& row : report.examinee_rows) {
    out += row.id + ',' + format_number(row.classical) + ',' + format_number(row.weighted) + '\n';
  }
  return out;
}

std::string summary_csv(const AnalysisReport& report) {
  const auto& c = report.summary_classical;
  const auto& w = report.summary_weighted;
  const auto n = static_cast<double>(report.items);
  std::string out = "kind,a_crit,mean,sd,cv,sum_w,singleton_count,avg_items_per_cluster\n";
  out += "classical,0," + format_number(c.mean) + ',' + format_number(c.sd) + ',' +
         csv_number(c.cv) + ',' + format_number(n) + ',' + std::to_string(report.items) + ",1\n";
  out += "weighted," + format_number(report.a_crit) + ',' + format_number(w.mean) + ',' +
         format_number(w.sd) + ',' + csv_number(w.cv) + ',' +
         format_number(report.weighting.sum_w) + ',' +
         std::to_string(report.weighting.singleton_count) + ',' +
         format_number(report.weighting.avg_items_per_cluster) + '\n';
  return out;
}

std::string sweep_csv(const SweepTable& table) {
  std::string out =
      "a_crit,mode,mean,sd,cv,sum_w,singleton_count,avg_items_per_cluster,baseline,best\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    out += format_number(row.a_crit) + ',' + std::string(to_string(row.mode)) + ',' +
           format_number(row.mean) + ',' + format_number(row.sd) + ',' + csv_number(row.cv) +
           ',' + format_number(row.sum_w) + ',' + std::to_string(row.singleton_count) + ',' +
           format_number(row.avg_items_per_cluster) + ',' + (row.baseline ? "1" : "0") + ',' +
           (table.best_index == r ? "1" : "0") + '\n';
  }
  return out;
}

}  // namespace ctscore
