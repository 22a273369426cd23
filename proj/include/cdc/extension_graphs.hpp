#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cdc/bit_matrix.hpp"
#include "cdc/codes.hpp"
#include "cdc/graph.hpp"
#include "cdc/rank_code.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

/// Graph whose vertex i is the subspace vertices[i].
struct SubspaceGraph {
  std::vector<Subspace> vertices;
  SearchGraph graph;
};

/// Graph whose vertex i is the matrix vertices[i].
struct MatrixGraph {
  std::vector<BitMatrix> vertices;
  SearchGraph graph;
};

/// Solids of F2^8 through the special point, in canonical order.
std::vector<Subspace> solids_through_special_point();

/// Vertices: solids through the special point meeting every member of F in
/// at most a point, canonical order. Edges: pairs meeting exactly in the
/// special point.
SubspaceGraph build_extension_graph(std::span<const Subspace> F);

/// Packs a 4 x 4 matrix into 16 bits, row i in bits 4i..4i+3, so the last
/// row is most significant.
std::uint16_t pack_4x4(const BitMatrix& a);
BitMatrix unpack_4x4(std::uint16_t packed);

/// Vertices: all 4 x 4 matrices (optionally with a fixed last row) at rank
/// distance >= 3 from every base word, ordered by pack_4x4. Edges: pairs at
/// rank distance >= 3.
MatrixGraph build_mrd_extension_graph(const RankMetricCode& base,
                                      std::optional<BitMatrix::Row> last_row = std::nullopt);

/// Solids meeting every word of `code` in at most a point, canonical order.
std::vector<Subspace> admissible_solids(std::span<const Subspace> code);
inline std::size_t count_admissible_solids(const ConstantDimensionCode& c) {
  return admissible_solids(c.words()).size();
}

/// Solids U of F2^v with dim(U n s) >= min_meet, canonical order.
std::vector<Subspace> solids_meeting(const Subspace& s, std::size_t min_meet);

}  // namespace cdc
