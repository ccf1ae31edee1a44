#include "ctscore/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ctscore/distance.hpp"
#include "ctscore/format.hpp"
#include "ctscore/plot.hpp"
#include "ctscore/report.hpp"
#include "ctscore/simulator.hpp"

namespace ctscore::cli {
namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << content;
  if (!f) throw UsageError("failed writing '" + path + "'");
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  ss.imbue(std::locale::classic());
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::istringstream ts(token);
    ts.imbue(std::locale::classic());
    T value{};
    if (!(ts >> value) || !(ts >> std::ws).eof()) {
      throw UsageError(std::string("bad value '") + token + "' in " + what);
    }
    out.push_back(value);
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

char parse_delimiter(const std::string& text) {
  if (text == "tab" || text == "\\t") return '\t';
  if (text.size() != 1) throw UsageError("delimiter must be a single character or 'tab'");
  return text[0];
}

DifficultyBand parse_band(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("band must be LO:HI");
  const auto lo = parse_list<double>(text.substr(0, colon), "band");
  const auto hi = parse_list<double>(text.substr(colon + 1), "band");
  if (lo.size() != 1 || hi.size() != 1 || !(0.0 <= lo[0] && lo[0] <= hi[0] && hi[0] <= 1.0)) {
    throw UsageError("band must satisfy 0 <= LO <= HI <= 1");
  }
  return {lo[0], hi[0]};
}

struct AnalyzeArgs {
  std::string input;
  std::optional<double> a_crit;
  bool sweep = false;
  std::string mode = "neighborhood";
  std::string sd = "population";
  std::string band = "0.30:0.85";
  std::string thresholds = "exact";
  double grid_step = 0.01;
  std::string format = "json";
  std::string plot = "none";
  std::string plot_out;
  bool transpose = false;
  std::string delimiter = ",";
  std::string missing = "error";
  bool header = true;
  bool ids = true;
  std::string dump_distances;
  std::string dump_correlations;
  std::string out;
};

struct SimulateArgs {
  std::size_t examinees = 30;
  std::string blocks = "4,4,4,4,4";
  std::string model = "duplicate_blocks";
  double eps = 0.0;
  std::string base_p = "0.5";
  double lambda = 1.0;
  std::string difficulties;
  std::uint64_t seed = 42;
  std::string out;
  std::string truth_out;
};

std::string correlations_csv(const CorrelationGrid& grid, const std::vector<std::string>& ids) {
  std::string text = "id";
  for (const auto& id : ids) text += ',' + id;
  text += '\n';
  for (std::size_t i = 0; i < grid.items; ++i) {
    text += ids[i];
    for (std::size_t j = 0; j < grid.items; ++j) {
      const auto& r = grid(i, j);
      text += ',' + (r ? format_number(*r) : std::string("NA"));
    }
    text += '\n';
  }
  return text;
}

int do_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  if (a.a_crit && a.sweep) throw UsageError("--a-crit and --sweep are mutually exclusive");
  if (a.a_crit && !(*a.a_crit >= 0.0)) throw UsageError("--a-crit must be >= 0");
  const auto plot_style = parse_plot_style(a.plot);
  if (plot_style != PlotStyle::none && a.a_crit) {
    throw UsageError("--plot needs a sweep; drop --a-crit");
  }
  if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");
  if (a.format == "csv" && a.out.empty()) throw UsageError("--format csv needs --out PREFIX");

  ParseOptions parse;
  parse.delimiter = parse_delimiter(a.delimiter);
  parse.header_row = a.header;
  parse.id_column = a.ids;
  parse.transpose = a.transpose;
  if (a.missing == "zero") {
    parse.missing_policy = MissingPolicy::as_incorrect;
  } else if (a.missing != "error") {
    throw UsageError("--missing must be error or zero");
  }

  AnalysisConfig config;
  config.mode = parse_weight_mode(a.mode);
  config.sd_mode = parse_sd_mode(a.sd);
  config.band = parse_band(a.band);
  if (a.thresholds == "exact") {
    config.strategy = ThresholdStrategy::exact;
  } else if (a.thresholds == "grid") {
    config.strategy = ThresholdStrategy::grid;
  } else {
    throw UsageError("--thresholds must be exact or grid");
  }
  config.grid_step = a.grid_step;
  config.a_crit = a.a_crit;

  const auto matrix = parse_response_csv(read_input(a.input), parse);
  if (matrix.imputed_cells() > 0) {
    err << "warning: " << matrix.imputed_cells() << " missing cell(s) scored as incorrect\n";
  }
  if (!a.dump_distances.empty()) {
    write_file(a.dump_distances, distance_csv(distance_matrix(matrix), matrix.item_ids()));
  }
  if (!a.dump_correlations.empty()) {
    write_file(a.dump_correlations, correlations_csv(interitem_pearson(matrix), matrix.item_ids()));
  }

  const auto report = analyze(matrix, config);

  if (a.format == "json") {
    const auto text = report_json(report);
    if (a.out.empty()) {
      out << text;
    } else {
      write_file(a.out, text);
    }
  } else {
    write_file(a.out + "_items.csv", items_csv(report));
    write_file(a.out + "_examinees.csv", examinees_csv(report));
    write_file(a.out + "_summary.csv", summary_csv(report));
    write_file(a.out + "_sweep.csv", sweep_csv(report.sweep));
  }

  if (plot_style != PlotStyle::none) {
    const auto text = emit_plot(report.sweep, plot_style);
    const char* ext = plot_style == PlotStyle::svg ? ".svg" : ".txt";
    std::string path = a.plot_out;
    if (path.empty() && !a.out.empty()) path = a.out + "_cv" + ext;
    if (!path.empty()) {
      write_file(path, text);
    } else if (plot_style == PlotStyle::ascii) {
      err << text;
    } else {
      throw UsageError("--plot svg needs --plot-out or --out");
    }
  }
  return kExitOk;
}

int do_simulate(const SimulateArgs& a, std::ostream& out) {
  SimConfig config;
  config.examinees = a.examinees;
  config.block_sizes = parse_list<std::size_t>(a.blocks, "--blocks");
  config.model = parse_sim_model(a.model);
  config.flip_noise = a.eps;
  config.base_p = parse_list<double>(a.base_p, "--base-p");
  config.dependence = a.lambda;
  if (!a.difficulties.empty()) config.difficulties = parse_list<double>(a.difficulties, "--difficulties");
  config.seed = a.seed;

  const auto result = simulate_matrix(config);
  const auto csv = to_csv(result.matrix);
  if (a.out.empty()) {
    out << csv;
  } else {
    write_file(a.out, csv);
  }
  if (!a.truth_out.empty()) write_file(a.truth_out, truth_json(result));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dependence-aware scoring for C-test response matrices", "ctscore"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Weight items by dependence cluster and score");
  analyze_cmd->add_option("input", an.input, "Response matrix file ('-' for stdin)")->required();
  auto* a_crit_opt = analyze_cmd->add_option("--a-crit", an.a_crit, "Fixed critical distance");
  auto* sweep_flag = analyze_cmd->add_flag("--sweep", an.sweep, "Select a_crit by maximal cv (default)");
  a_crit_opt->excludes(sweep_flag);
  analyze_cmd->add_option("--mode", an.mode, "neighborhood|partition")->capture_default_str();
  analyze_cmd->add_option("--sd", an.sd, "population|sample")->capture_default_str();
  analyze_cmd->add_option("--band", an.band, "Difficulty band LO:HI")->capture_default_str();
  analyze_cmd->add_option("--thresholds", an.thresholds, "exact|grid")->capture_default_str();
  analyze_cmd->add_option("--grid-step", an.grid_step, "Step for --thresholds grid")->capture_default_str();
  analyze_cmd->add_option("--format", an.format, "json|csv")->capture_default_str();
  analyze_cmd->add_option("--plot", an.plot, "ascii|svg|none")->capture_default_str();
  analyze_cmd->add_option("--plot-out", an.plot_out, "Plot destination");
  analyze_cmd->add_flag("--transpose", an.transpose, "Rows are items, columns are examinees");
  analyze_cmd->add_option("--delimiter", an.delimiter, "Field delimiter ('tab' allowed)")->capture_default_str();
  analyze_cmd->add_option("--missing", an.missing, "error|zero")->capture_default_str();
  analyze_cmd->add_flag("--header,!--no-header", an.header, "First row holds ids");
  analyze_cmd->add_flag("--ids,!--no-ids", an.ids, "First column holds ids");
  analyze_cmd->add_option("--dump-distances", an.dump_distances, "Write the distance matrix CSV");
  analyze_cmd->add_option("--dump-correlations", an.dump_correlations, "Write inter-item Pearson CSV");
  analyze_cmd->add_option("-o,--out", an.out, "JSON report path, or CSV file prefix");

  SimulateArgs sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Generate a matrix with planted dependent blocks");
  simulate_cmd->add_option("--examinees", sim.examinees)->capture_default_str();
  simulate_cmd->add_option("--blocks", sim.blocks, "Block sizes, comma separated")->capture_default_str();
  simulate_cmd->add_option("--model", sim.model, "duplicate_blocks|logistic_latent")->capture_default_str();
  simulate_cmd->add_option("--eps", sim.eps, "Flip noise (duplicate_blocks)")->capture_default_str();
  simulate_cmd->add_option("--base-p", sim.base_p, "Base success rate, one or per block")->capture_default_str();
  simulate_cmd->add_option("--lambda", sim.lambda, "Dependence strength (logistic_latent)")->capture_default_str();
  simulate_cmd->add_option("--difficulties", sim.difficulties, "Item difficulties, one per item");
  simulate_cmd->add_option("--seed", sim.seed)->capture_default_str();
  simulate_cmd->add_option("--out", sim.out, "Matrix CSV path (stdout if omitted)");
  simulate_cmd->add_option("--truth-out", sim.truth_out, "Planted block map JSON path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (analyze_cmd->parsed()) return do_analyze(an, out, err);
    return do_simulate(sim, out);
  } catch (const SelectionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoSelection;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace ctscore::cli
