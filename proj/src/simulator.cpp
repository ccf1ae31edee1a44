#include "ctscore/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace ctscore {

std::string_view to_string(SimModel model) {
  return model == SimModel::duplicate_blocks ? "duplicate_blocks" : "logistic_latent";
}

SimModel parse_sim_model(std::string_view text) {
  if (text == "duplicate_blocks") return SimModel::duplicate_blocks;
  if (text == "logistic_latent") return SimModel::logistic_latent;
  throw std::invalid_argument("unknown model '" + std::string(text) + "'");
}

std::size_t SimConfig::items() const {
  std::size_t n = 0;
  for (auto b : block_sizes) n += b;
  return n;
}

void SimConfig::validate() const {
  if (examinees < 2) throw std::invalid_argument("need at least 2 examinees");
  if (block_sizes.empty()) throw std::invalid_argument("block_sizes is empty");
  for (auto b : block_sizes)
    if (b == 0) throw std::invalid_argument("block sizes must be positive");
  if (items() < 2) throw std::invalid_argument("need at least 2 items");
  if (model == SimModel::duplicate_blocks) {
    if (!(flip_noise >= 0.0 && flip_noise <= 0.5)) {
      throw std::invalid_argument("flip noise must lie in [0, 0.5]");
    }
    if (base_p.size() != 1 && base_p.size() != block_sizes.size()) {
      throw std::invalid_argument("base_p needs one value or one per block");
    }
    for (double p : base_p)
      if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("base_p must lie in (0, 1)");
  } else {
    if (!difficulties.empty() && difficulties.size() != items()) {
      throw std::invalid_argument("difficulties need one value per item");
    }
    for (double b : difficulties)
      if (!std::isfinite(b)) throw std::invalid_argument("difficulties must be finite");
    if (!(dependence >= 0.0) || !std::isfinite(dependence)) {
      throw std::invalid_argument("dependence strength must be finite and >= 0");
    }
  }
}

SimResult simulate_matrix(const SimConfig& config) {
  config.validate();
  const std::size_t m = config.examinees;
  const std::size_t n = config.items();
  const std::size_t blocks = config.block_sizes.size();

  PlantedTruth truth;
  truth.block_of.reserve(n);
  for (std::size_t b = 0; b < blocks; ++b) truth.block_of.insert(truth.block_of.end(), config.block_sizes[b], b);

  SplitMix64 rng(config.seed);
  std::vector<std::uint8_t> cells(m * n, 0);

  if (config.model == SimModel::duplicate_blocks) {
    std::vector<std::uint8_t> base(m);
    std::size_t item = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const double p = config.base_p.size() == 1 ? config.base_p[0] : config.base_p[b];
      for (std::size_t e = 0; e < m; ++e) base[e] = rng.uniform() < p;
      for (std::size_t k = 0; k < config.block_sizes[b]; ++k, ++item) {
        for (std::size_t e = 0; e < m; ++e) {
          const bool flip = rng.uniform() < config.flip_noise;
          cells[e * n + item] = static_cast<std::uint8_t>(base[e] ^ flip);
        }
      }
    }
  } else {
    std::vector<double> ability(m);
    for (auto& theta : ability) theta = rng.approx_normal();
    std::vector<double> latent(m * blocks);
    for (auto& u : latent) u = rng.approx_normal();
    for (std::size_t e = 0; e < m; ++e) {
      for (std::size_t i = 0; i < n; ++i) {
        const double b = config.difficulties.empty() ? 0.0 : config.difficulties[i];
        const double eta = ability[e] + config.dependence * latent[e * blocks + truth.block_of[i]] - b;
        const double prob = 1.0 / (1.0 + std::exp(-eta));
        cells[e * n + i] = rng.uniform() < prob;
      }
    }
  }

  std::vector<std::string> examinee_ids, item_ids;
  for (std::size_t e = 1; e <= m; ++e) examinee_ids.push_back("e" + std::to_string(e));
  for (std::size_t i = 1; i <= n; ++i) item_ids.push_back("i" + std::to_string(i));
  return {ResponseMatrix(std::move(examinee_ids), std::move(item_ids), std::move(cells)),
          std::move(truth)};
}

std::string truth_json(const SimResult& result) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  nlohmann::ordered_json map = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < result.truth.block_of.size(); ++i) {
    map[result.matrix.item_ids()[i]] = result.truth.block_of[i];
  }
  doc["block_of"] = std::move(map);
  return doc.dump(2) + "\n";
}

}  // namespace ctscore
