#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cdc/bit_matrix.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

/// rk(A - B); throws std::invalid_argument on shape mismatch.
std::size_t rank_distance(const BitMatrix& a, const BitMatrix& b);

/// Set of m x n binary matrices with a declared minimum rank distance.
struct RankMetricCode {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<BitMatrix> words;
  std::size_t declared_min_rank_distance = 0;

  /// Shapes agree and, for two or more words, the minimum rank distance is
  /// at least the declared value. Throws std::invalid_argument otherwise.
  void validate() const;
};

struct RankDistanceProfile {
  std::optional<std::size_t> min;  // unset below two words
  std::map<std::size_t, std::uint64_t> histogram;
};

RankDistanceProfile rank_distance_profile(const RankMetricCode& code);

/// Gabidulin code over F16 = F2^4: matrices of a_0 x + ... + a_{n-d} x^(2^(n-d)).
/// Only the square 4 x 4 case is supported.
RankMetricCode gabidulin(std::size_t m = 4, std::size_t n = 4, std::size_t d = 3);

/// Words whose last row equals `row`.
RankMetricCode last_row_subcode(const RankMetricCode& code, BitMatrix::Row row);

/// Lambda(A) = <(I_m | A)> in F2^(m+n).
Subspace lift_matrix(const BitMatrix& a);

}  // namespace cdc
