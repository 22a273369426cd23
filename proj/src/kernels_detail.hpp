#pragma once

#include <array>
#include <bit>
#include <stdexcept>

#include "cdc/kernels.hpp"

namespace cdc::kernels::detail {

inline constexpr std::size_t kMaxDistance = 128;

inline DistanceHistogram to_histogram(const std::vector<std::uint64_t>& counts) {
  DistanceHistogram h;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] == 0) continue;
    h.counts[d] = counts[d];
    if (!h.min) h.min = d;
  }
  return h;
}

inline std::size_t rank_distance_raw(const BitMatrix& a, const BitMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("rank distance: shape mismatch");
  std::array<BitMatrix::Row, 64> diff;
  for (std::size_t i = 0; i < a.rows(); ++i) diff[i] = a.row(i) ^ b.row(i);
  return rank_of(std::span<const BitMatrix::Row>(diff.data(), a.rows()));
}

inline bool meets_all_within(const Subspace& u, std::span<const Subspace> code, std::size_t max_meet) {
  for (const auto& w : code) {
    if (u.dim() + w.dim() - span_rank(u.rows(), w.rows()) > max_meet) return false;
  }
  return true;
}

// Adds the nonzero vectors of w (points) and of its dual (hyperplane normals).
inline void add_incidences(const Subspace& w, std::uint32_t* by_point, std::uint32_t* by_normal) {
  for (auto x : w.nonzero_vectors()) ++by_point[x - 1];
  for (auto h : dual(w).nonzero_vectors()) ++by_normal[h - 1];
}

}  // namespace cdc::kernels::detail
