#include <omp.h>

#include <algorithm>

#include "cdc/kernels.hpp"
#include "kernels_detail.hpp"

namespace cdc::kernels {

int max_threads() { return omp_get_max_threads(); }

void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

namespace omp {
namespace {

template <typename Distance, typename Item>
DistanceHistogram pairwise(std::span<const Item> words, Distance distance) {
  const auto n = static_cast<std::ptrdiff_t>(words.size());
  std::vector<std::uint64_t> counts(detail::kMaxDistance + 1, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(detail::kMaxDistance + 1, 0);
#pragma omp for schedule(dynamic, 16) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      for (std::ptrdiff_t j = i + 1; j < n; ++j) {
        ++local[distance(words[static_cast<std::size_t>(i)], words[static_cast<std::size_t>(j)])];
      }
    }
#pragma omp critical(cdc_pairwise_merge)
    for (std::size_t d = 0; d < local.size(); ++d) counts[d] += local[d];
  }
  return detail::to_histogram(counts);
}

}  // namespace

DistanceHistogram pairwise_distances(std::span<const Subspace> words) {
  return pairwise(words, [](const Subspace& a, const Subspace& b) { return subspace_distance(a, b); });
}

DistanceHistogram pairwise_rank_distances(std::span<const BitMatrix> words) {
  return pairwise(words, [](const BitMatrix& a, const BitMatrix& b) { return detail::rank_distance_raw(a, b); });
}

std::vector<std::uint32_t> filter_max_meet(std::span<const Subspace> candidates, std::span<const Subspace> code,
                                           std::size_t max_meet) {
  const auto n = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<char> keep(candidates.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    keep[static_cast<std::size_t>(i)] = detail::meets_all_within(candidates[static_cast<std::size_t>(i)], code, max_meet);
  }
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i]) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

IncidenceCounts incidence_counts(std::span<const Subspace> words, std::size_t v) {
  const std::size_t cells = (std::size_t{1} << v) - 1;
  IncidenceCounts out{std::vector<std::uint32_t>(cells, 0), std::vector<std::uint32_t>(cells, 0)};
  const auto n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel
  {
    std::vector<std::uint32_t> points(cells, 0);
    std::vector<std::uint32_t> normals(cells, 0);
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) detail::add_incidences(words[static_cast<std::size_t>(i)], points.data(), normals.data());
#pragma omp critical(cdc_incidence_merge)
    for (std::size_t c = 0; c < cells; ++c) {
      out.by_point[c] += points[c];
      out.by_normal[c] += normals[c];
    }
  }
  return out;
}

SearchGraph build_graph(std::size_t n, const EdgePredicate& edge) {
  // Each worker fills the upper triangle of its own rows; the lower
  // triangle is mirrored afterwards.
  SearchGraph g(n);
  GraphRowWriter writer(g);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t u = 0; u < count; ++u) {
    for (std::size_t v = static_cast<std::size_t>(u) + 1; v < n; ++v) {
      if (edge(static_cast<std::size_t>(u), v)) writer.set(static_cast<std::size_t>(u), v);
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    const auto row = g.row(u);
    for (std::size_t w = (u + 1) / 64; w < row.size(); ++w) {
      for (auto bits = row[w]; bits != 0; bits &= bits - 1) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (v > u) writer.set(v, u);
      }
    }
  }
  return g;
}

}  // namespace omp
}  // namespace cdc::kernels
