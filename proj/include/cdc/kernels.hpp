#pragma once

// Data-parallel inner loops. Each kernel has a plain serial reference in
// `serial` and an OpenMP version in `omp` with identical results; the
// unqualified entry points dispatch to the OpenMP version.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cdc/bit_matrix.hpp"
#include "cdc/graph.hpp"
#include "cdc/subspace.hpp"

namespace cdc::kernels {

struct DistanceHistogram {
  std::optional<std::size_t> min;  // unset below two items
  std::map<std::size_t, std::uint64_t> counts;

  friend bool operator==(const DistanceHistogram&, const DistanceHistogram&) = default;
};

/// Point and hyperplane incidence counts of a set of subspaces of F2^v.
/// by_point[x - 1] counts words containing <x>; by_normal[h - 1] counts words
/// inside the hyperplane h^perp.
struct IncidenceCounts {
  std::vector<std::uint32_t> by_point;
  std::vector<std::uint32_t> by_normal;

  friend bool operator==(const IncidenceCounts&, const IncidenceCounts&) = default;
};

using EdgePredicate = std::function<bool(std::size_t, std::size_t)>;

namespace serial {
DistanceHistogram pairwise_distances(std::span<const Subspace> words);
DistanceHistogram pairwise_rank_distances(std::span<const BitMatrix> words);
std::vector<std::uint32_t> filter_max_meet(std::span<const Subspace> candidates, std::span<const Subspace> code,
                                           std::size_t max_meet);
IncidenceCounts incidence_counts(std::span<const Subspace> words, std::size_t v);
SearchGraph build_graph(std::size_t n, const EdgePredicate& edge);
}  // namespace serial

namespace omp {
DistanceHistogram pairwise_distances(std::span<const Subspace> words);
DistanceHistogram pairwise_rank_distances(std::span<const BitMatrix> words);
std::vector<std::uint32_t> filter_max_meet(std::span<const Subspace> candidates, std::span<const Subspace> code,
                                           std::size_t max_meet);
IncidenceCounts incidence_counts(std::span<const Subspace> words, std::size_t v);
SearchGraph build_graph(std::size_t n, const EdgePredicate& edge);
}  // namespace omp

/// Histogram of d_s over all unordered pairs.
inline DistanceHistogram pairwise_distances(std::span<const Subspace> words) { return omp::pairwise_distances(words); }
/// Histogram of d_r over all unordered pairs.
inline DistanceHistogram pairwise_rank_distances(std::span<const BitMatrix> words) {
  return omp::pairwise_rank_distances(words);
}
/// Indices (ascending) of candidates meeting every code word in dimension <= max_meet.
inline std::vector<std::uint32_t> filter_max_meet(std::span<const Subspace> candidates, std::span<const Subspace> code,
                                                  std::size_t max_meet) {
  return omp::filter_max_meet(candidates, code, max_meet);
}
inline IncidenceCounts incidence_counts(std::span<const Subspace> words, std::size_t v) {
  return omp::incidence_counts(words, v);
}
/// Graph with an edge {u, v} for u < v iff edge(u, v).
inline SearchGraph build_graph(std::size_t n, const EdgePredicate& edge) { return omp::build_graph(n, edge); }

/// Worker count used by the OpenMP kernels (1 without OpenMP).
int max_threads();
void set_threads(int n);

}  // namespace cdc::kernels
