#include "cdc/extension_graphs.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdc/grassmannian.hpp"
#include "cdc/kernels.hpp"

namespace cdc {

std::vector<Subspace> solids_through_special_point() {
  const Subspace::Row e8 = Subspace::Row{1} << 7;
  std::vector<Subspace> out;
  for (const auto& plane : enumerate_grassmannian(7, 3)) {
    std::vector<Subspace::Row> rows(plane.rows().begin(), plane.rows().end());
    rows.push_back(e8);
    out.emplace_back(8, rows);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubspaceGraph build_extension_graph(std::span<const Subspace> F) {
  for (const auto& s : F) {
    if (s.ambient() != 8) throw AmbientMismatch("extension graph: F must live in F2^8");
  }
  const auto candidates = solids_through_special_point();
  SubspaceGraph out;
  for (auto i : kernels::filter_max_meet(candidates, F, 1)) out.vertices.push_back(candidates[i]);
  const auto& v = out.vertices;
  out.graph = kernels::build_graph(v.size(), [&](std::size_t a, std::size_t b) {
    return span_rank(v[a].rows(), v[b].rows()) == 7;
  });
  return out;
}

std::uint16_t pack_4x4(const BitMatrix& a) {
  if (a.rows() != 4 || a.cols() != 4) throw std::invalid_argument("pack_4x4: need a 4 x 4 matrix");
  std::uint16_t out = 0;
  for (std::size_t i = 0; i < 4; ++i) out |= static_cast<std::uint16_t>(a.row(i) << (4 * i));
  return out;
}

BitMatrix unpack_4x4(std::uint16_t packed) {
  std::vector<BitMatrix::Row> rows(4);
  for (std::size_t i = 0; i < 4; ++i) rows[i] = (packed >> (4 * i)) & 0xFU;
  return BitMatrix(4, std::move(rows));
}

MatrixGraph build_mrd_extension_graph(const RankMetricCode& base, std::optional<BitMatrix::Row> last_row) {
  if (base.m != 4 || base.n != 4) throw std::invalid_argument("MRD extension graph: base must be 4 x 4");
  std::vector<std::uint16_t> packed_base;
  for (const auto& w : base.words) packed_base.push_back(pack_4x4(w));
  const auto far = [](std::uint16_t a, std::uint16_t b) {
    const std::uint16_t x = a ^ b;
    const BitMatrix::Row rows[4] = {x & 0xFU, (x >> 4) & 0xFU, (x >> 8) & 0xFU, (x >> 12) & 0xFU};
    return rank_of(rows) >= 3;
  };
  std::vector<std::uint16_t> keep;
  for (std::uint32_t m = 0; m < (1U << 16); ++m) {
    const auto packed = static_cast<std::uint16_t>(m);
    if (last_row && (packed >> 12) != *last_row) continue;
    if (std::all_of(packed_base.begin(), packed_base.end(), [&](std::uint16_t b) { return far(packed, b); })) {
      keep.push_back(packed);
    }
  }
  MatrixGraph out;
  for (auto p : keep) out.vertices.push_back(unpack_4x4(p));
  out.graph = kernels::build_graph(keep.size(), [&](std::size_t a, std::size_t b) { return far(keep[a], keep[b]); });
  return out;
}

std::vector<Subspace> admissible_solids(std::span<const Subspace> code) {
  const Grassmannian solids(8, 4);
  std::vector<Subspace> out;
  for (auto i : kernels::filter_max_meet(solids.elements(), code, 1)) out.push_back(solids[i]);
  return out;
}

std::vector<Subspace> solids_meeting(const Subspace& s, std::size_t min_meet) {
  std::vector<Subspace> out;
  for (const auto& u : enumerate_grassmannian(s.ambient(), 4)) {
    if (intersection_dim(u, s) >= min_meet) out.push_back(u);
  }
  return out;
}

}  // namespace cdc
