#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cdc {

/// Dense matrix over F2 with at most 64 columns. Row i is one machine word;
/// bit j of a row is the coefficient of coordinate j+1.
class BitMatrix {
 public:
  using Row = std::uint64_t;
  static constexpr std::size_t kMaxCols = 64;

  BitMatrix() = default;
  /// Throws std::invalid_argument if ncols > 64 or a row has bits at or
  /// beyond ncols.
  BitMatrix(std::size_t ncols, std::vector<Row> rows);

  static BitMatrix identity(std::size_t n);
  static BitMatrix zero(std::size_t nrows, std::size_t ncols);
  /// Parses rows written as 0/1 strings, leftmost character = coordinate 1.
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return ncols_; }
  Row row(std::size_t i) const { return rows_[i]; }
  std::span<const Row> row_words() const { return rows_; }
  bool get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1U; }
  void set(std::size_t i, std::size_t j, bool value);

  BitMatrix transpose() const;
  /// Vertical concatenation; column counts must agree.
  BitMatrix stacked(const BitMatrix& below) const;
  /// Row-vector convention: the result maps x to (x * this) * rhs.
  BitMatrix operator*(const BitMatrix& rhs) const;
  BitMatrix operator^(const BitMatrix& rhs) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;
  friend std::strong_ordering operator<=>(const BitMatrix& a, const BitMatrix& b) {
    if (auto c = a.ncols_ <=> b.ncols_; c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  std::size_t ncols_ = 0;
  std::vector<Row> rows_;
};

struct RrefResult {
  BitMatrix matrix;
  std::size_t rank = 0;
};

/// Unique reduced row echelon form of the row space, zero rows dropped.
/// Pivots are the lowest set bits and rows are ordered by pivot.
RrefResult rref(const BitMatrix& m);

/// Rank of a list of row words (any width up to 64).
std::size_t rank_of(std::span<const BitMatrix::Row> rows);
inline std::size_t rank(const BitMatrix& m) { return rank_of(m.row_words()); }

/// Basis (in RREF) of {x : m * x^T = 0}.
BitMatrix kernel(const BitMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<BitMatrix> inverse(const BitMatrix& m);

/// x * m for a row vector x.
inline BitMatrix::Row apply(BitMatrix::Row x, std::span<const BitMatrix::Row> m) {
  BitMatrix::Row out = 0;
  while (x != 0) {
    out ^= m[static_cast<std::size_t>(std::countr_zero(x))];
    x &= x - 1;
  }
  return out;
}

/// Parity of the standard dot product.
inline bool dot(BitMatrix::Row a, BitMatrix::Row b) { return (std::popcount(a & b) & 1) != 0; }

}  // namespace cdc
