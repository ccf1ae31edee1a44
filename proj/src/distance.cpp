#include "ctscore/distance.hpp"

#include <algorithm>
#include <bit>

#include "ctscore/format.hpp"

namespace ctscore {

std::size_t mismatch_count(const ItemVector& u, const ItemVector& v) {
  if (u.size() != v.size()) {
    throw DataError("item vectors differ in length (" + std::to_string(u.size()) + " vs " +
                    std::to_string(v.size()) + ")");
  }
  std::size_t count = 0;
  for (std::size_t e = 0; e < u.size(); ++e) count += (u.values[e] != v.values[e]);
  return count;
}

double item_distance(const ItemVector& u, const ItemVector& v) {
  const std::size_t count = mismatch_count(u, v);
  if (u.size() == 0) throw DataError("item vectors are empty");
  return static_cast<double>(count) / static_cast<double>(u.size());
}

DistanceMatrix::DistanceMatrix(std::size_t items, std::size_t examinees,
                               std::vector<std::uint32_t> counts)
    : items_(items), examinees_(examinees), counts_(std::move(counts)) {
  if (counts_.size() != items_ * items_) throw DataError("distance grid has wrong size");
  if (examinees_ == 0) throw DataError("distance normalization needs m >= 1");
}

std::vector<std::uint32_t> DistanceMatrix::distinct_counts() const {
  std::vector<std::uint32_t> out;
  out.reserve(items_ * (items_ - 1) / 2);
  for (std::size_t i = 0; i < items_; ++i)
    for (std::size_t j = i + 1; j < items_; ++j) out.push_back(count(i, j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::uint32_t> DistanceMatrix::min_positive_count() const {
  for (auto c : distinct_counts())
    if (c > 0) return c;
  return std::nullopt;
}

DistanceMatrix distance_matrix(const ResponseMatrix& matrix) {
  const std::size_t m = matrix.examinees();
  const std::size_t n = matrix.items();
  const std::size_t words = (m + 63) / 64;

  // item-major bit columns
  std::vector<std::uint64_t> bits(n * words, 0);
  for (std::size_t e = 0; e < m; ++e) {
    const auto row = matrix.row(e);
    for (std::size_t i = 0; i < n; ++i) {
      if (row[i]) bits[i * words + e / 64] |= std::uint64_t{1} << (e % 64);
    }
  }

  std::vector<std::uint32_t> counts(n * n, 0);
  const auto items = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < items; ++i) {
    const std::uint64_t* a = bits.data() + i * words;
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
      const std::uint64_t* b = bits.data() + j * words;
      std::uint32_t c = 0;
      for (std::size_t w = 0; w < words; ++w) c += std::popcount(a[w] ^ b[w]);
      counts[i * n + j] = c;
      counts[j * n + i] = c;
    }
  }
  return DistanceMatrix(n, m, std::move(counts));
}

std::string distance_csv(const DistanceMatrix& d, const std::vector<std::string>& item_ids,
                         char delimiter) {
  std::string out = "id";
  for (const auto& id : item_ids) {
    out += delimiter;
    out += id;
  }
  out += '\n';
  for (std::size_t i = 0; i < d.items(); ++i) {
    out += item_ids[i];
    for (std::size_t j = 0; j < d.items(); ++j) {
      out += delimiter;
      out += format_number(d(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace ctscore
