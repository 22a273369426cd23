#include <algorithm>

#include "cdc/kernels.hpp"
#include "kernels_detail.hpp"

namespace cdc::kernels::serial {

DistanceHistogram pairwise_distances(std::span<const Subspace> words) {
  std::vector<std::uint64_t> counts(detail::kMaxDistance + 1, 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) ++counts[subspace_distance(words[i], words[j])];
  }
  return detail::to_histogram(counts);
}

DistanceHistogram pairwise_rank_distances(std::span<const BitMatrix> words) {
  std::vector<std::uint64_t> counts(detail::kMaxDistance + 1, 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) ++counts[detail::rank_distance_raw(words[i], words[j])];
  }
  return detail::to_histogram(counts);
}

std::vector<std::uint32_t> filter_max_meet(std::span<const Subspace> candidates, std::span<const Subspace> code,
                                           std::size_t max_meet) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (detail::meets_all_within(candidates[i], code, max_meet)) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

IncidenceCounts incidence_counts(std::span<const Subspace> words, std::size_t v) {
  IncidenceCounts out{std::vector<std::uint32_t>((std::size_t{1} << v) - 1, 0),
                      std::vector<std::uint32_t>((std::size_t{1} << v) - 1, 0)};
  for (const auto& w : words) detail::add_incidences(w, out.by_point.data(), out.by_normal.data());
  return out;
}

SearchGraph build_graph(std::size_t n, const EdgePredicate& edge) {
  SearchGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (edge(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace cdc::kernels::serial
