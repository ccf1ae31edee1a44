#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctscore/response_matrix.hpp"

namespace ctscore {

/// Number of positions where two item vectors disagree.
std::size_t mismatch_count(const ItemVector& u, const ItemVector& v);

/// Mismatch count divided by vector length. Throws DataError on a length
/// mismatch or empty vectors.
double item_distance(const ItemVector& u, const ItemVector& v);

/// Symmetric item x item matrix of normalized mismatch distances.
///
/// Entries are held as integer mismatch counts over a common denominator m,
/// so every distance is exactly k/m and threshold tests can be done on counts.
class DistanceMatrix {
public:
  DistanceMatrix(std::size_t items, std::size_t examinees, std::vector<std::uint32_t> counts);

  std::size_t items() const { return items_; }
  std::size_t examinees() const { return examinees_; }

  std::uint32_t count(std::size_t i, std::size_t j) const { return counts_[i * items_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return static_cast<double>(count(i, j)) / static_cast<double>(examinees_);
  }

  /// Sorted distinct off-diagonal mismatch counts.
  std::vector<std::uint32_t> distinct_counts() const;

  /// Smallest off-diagonal count strictly above zero, if any.
  std::optional<std::uint32_t> min_positive_count() const;

  const std::vector<std::uint32_t>& counts() const { return counts_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
  std::size_t items_;
  std::size_t examinees_;
  std::vector<std::uint32_t> counts_;
};

/// OpenMP kernel over bit-packed item columns.
DistanceMatrix distance_matrix(const ResponseMatrix& matrix);

/// Delimited dump with item ids as header and leading id column.
std::string distance_csv(const DistanceMatrix& d, const std::vector<std::string>& item_ids,
                         char delimiter = ',');

}  // namespace ctscore
