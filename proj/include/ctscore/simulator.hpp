#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ctscore/response_matrix.hpp"

namespace ctscore {

/// splitmix64 stream (Vigna). Output sequence is fixed for a given seed.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// next() / 2^64
  double uniform() { return static_cast<double>(next()) * 0x1.0p-64; }

  /// Irwin-Hall(12) - 6 approximation of a standard normal.
  double approx_normal() {
    double sum = 0.0;
    for (int k = 0; k < 12; ++k) sum += uniform();
    return sum - 6.0;
  }

private:
  std::uint64_t state_;
};

enum class SimModel { duplicate_blocks, logistic_latent };

std::string_view to_string(SimModel model);
SimModel parse_sim_model(std::string_view text);

struct SimConfig {
  std::size_t examinees = 30;
  std::vector<std::size_t> block_sizes{4, 4, 4, 4, 4};
  SimModel model = SimModel::duplicate_blocks;
  /// duplicate_blocks: per-cell flip probability in [0, 0.5].
  double flip_noise = 0.0;
  /// duplicate_blocks: one value per block, or a single value for all.
  std::vector<double> base_p{0.5};
  /// logistic_latent: one value per item, or empty for all zero.
  std::vector<double> difficulties;
  /// logistic_latent: weight of the shared per-block latent.
  double dependence = 1.0;
  std::uint64_t seed = 42;

  std::size_t items() const;
  /// Throws std::invalid_argument on an out-of-range field.
  void validate() const;
};

struct PlantedTruth {
  std::vector<std::size_t> block_of;
};

struct SimResult {
  ResponseMatrix matrix;
  PlantedTruth truth;
};

/// Draw order: duplicate_blocks goes block by block, drawing the base column
/// (examinee order) and then one flip draw per cell, item-major.
/// logistic_latent draws all abilities, then block latents examinee-major,
/// then responses examinee-major.
SimResult simulate_matrix(const SimConfig& config);

/// Sidecar JSON mapping item id to planted block id.
std::string truth_json(const SimResult& result);

}  // namespace ctscore
