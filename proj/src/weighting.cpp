#include "ctscore/weighting.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace ctscore {
namespace {

class DisjointSet {
public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

}  // namespace

std::string_view to_string(WeightMode mode) {
  return mode == WeightMode::neighborhood ? "neighborhood" : "partition";
}

WeightMode parse_weight_mode(std::string_view text) {
  if (text == "neighborhood") return WeightMode::neighborhood;
  if (text == "partition") return WeightMode::partition;
  throw std::invalid_argument("unknown weight mode '" + std::string(text) + "'");
}

WeightAssignment make_assignment(double a_crit, WeightMode mode, std::vector<std::uint32_t> k) {
  WeightAssignment wa;
  wa.a_crit = a_crit;
  wa.mode = mode;
  wa.w.reserve(k.size());
  std::map<std::uint32_t, std::size_t> by_size;
  for (auto size : k) {
    if (size == 0) throw std::invalid_argument("cluster size must be positive");
    wa.w.push_back(1.0 / static_cast<double>(size));
    ++by_size[size];
    if (size == 1) ++wa.singleton_count;
  }
  for (auto [size, count] : by_size) {
    wa.sum_w += static_cast<double>(count) / static_cast<double>(size);
  }
  wa.k = std::move(k);
  return wa;
}

WeightAssignment neighborhood_weights(const DistanceMatrix& d, double a_crit) {
  const std::size_t n = d.items();
  const std::size_t m = d.examinees();
  std::vector<std::uint32_t> k(n, 1);
  const auto items = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < items; ++i) {
    std::uint32_t size = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != static_cast<std::size_t>(i) && below_threshold(d.count(i, j), m, a_crit)) ++size;
    }
    k[i] = size;
  }
  return make_assignment(a_crit, WeightMode::neighborhood, std::move(k));
}

Partition partition_clusters(const DistanceMatrix& d, double a_crit) {
  const std::size_t n = d.items();
  const std::size_t m = d.examinees();
  DisjointSet sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (below_threshold(d.count(i, j), m, a_crit)) sets.unite(i, j);

  // Ids in order of first appearance, i.e. by smallest member.
  Partition p;
  p.cluster_of.assign(n, 0);
  std::vector<std::size_t> id_of_root(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find(i);
    if (id_of_root[root] == n) {
      id_of_root[root] = p.clusters.size();
      p.clusters.emplace_back();
    }
    p.cluster_of[i] = id_of_root[root];
    p.clusters[id_of_root[root]].push_back(i);
  }
  return p;
}

WeightAssignment partition_weights(const Partition& p, double a_crit) {
  std::vector<std::uint32_t> k(p.cluster_of.size(), 0);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (p.cluster_of[i] >= p.clusters.size()) throw std::invalid_argument("cluster id out of range");
    k[i] = static_cast<std::uint32_t>(p.clusters[p.cluster_of[i]].size());
  }
  return make_assignment(a_crit, WeightMode::partition, std::move(k));
}

WeightAssignment assign_weights(const DistanceMatrix& d, double a_crit, WeightMode mode) {
  if (mode == WeightMode::neighborhood) return neighborhood_weights(d, a_crit);
  return partition_weights(partition_clusters(d, a_crit), a_crit);
}

WeightSummary weight_summary(const WeightAssignment& wa, std::size_t n) {
  return {wa.sum_w, wa.singleton_count, static_cast<double>(n) / wa.sum_w};
}

}  // namespace ctscore
