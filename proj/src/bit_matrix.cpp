#include "cdc/bit_matrix.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace cdc {
namespace {

BitMatrix::Row col_mask(std::size_t ncols) {
  return ncols >= 64 ? ~BitMatrix::Row{0} : ((BitMatrix::Row{1} << ncols) - 1);
}

// In-place Gauss-Jordan elimination; returns the rank and leaves the
// nonzero rows in RREF at the front.
std::size_t eliminate(std::vector<BitMatrix::Row>& rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    const BitMatrix::Row bit = BitMatrix::Row{1} << col;
    std::size_t pivot = r;
    while (pivot < rows.size() && (rows[pivot] & bit) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i] & bit) != 0) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t ncols, std::vector<Row> rows) : ncols_(ncols), rows_(std::move(rows)) {
  if (ncols > kMaxCols) throw std::invalid_argument("BitMatrix: more than 64 columns");
  const Row mask = col_mask(ncols);
  for (Row r : rows_) {
    if ((r & ~mask) != 0) throw std::invalid_argument("BitMatrix: row has bits beyond ncols");
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  std::vector<Row> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = Row{1} << i;
  return BitMatrix(n, std::move(rows));
}

BitMatrix BitMatrix::zero(std::size_t nrows, std::size_t ncols) {
  return BitMatrix(ncols, std::vector<Row>(nrows, 0));
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) return {};
  const std::size_t ncols = rows.front().size();
  std::vector<Row> words;
  words.reserve(rows.size());
  for (const auto& s : rows) {
    if (s.size() != ncols) throw std::invalid_argument("BitMatrix: ragged rows");
    Row w = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] == '1') {
        w |= Row{1} << j;
      } else if (s[j] != '0') {
        throw std::invalid_argument("BitMatrix: expected 0/1 characters");
      }
    }
    words.push_back(w);
  }
  return BitMatrix(ncols, std::move(words));
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (j >= ncols_) throw std::out_of_range("BitMatrix::set: column out of range");
  if (value) {
    rows_[i] |= Row{1} << j;
  } else {
    rows_[i] &= ~(Row{1} << j);
  }
}

BitMatrix BitMatrix::transpose() const {
  std::vector<Row> out(ncols_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (get(i, j)) out[j] |= Row{1} << i;
    }
  }
  return BitMatrix(rows_.size(), std::move(out));
}

BitMatrix BitMatrix::stacked(const BitMatrix& below) const {
  if (rows_.empty()) return below;
  if (below.rows_.empty()) return *this;
  if (ncols_ != below.ncols_) throw std::invalid_argument("BitMatrix::stacked: column mismatch");
  std::vector<Row> out = rows_;
  out.insert(out.end(), below.rows_.begin(), below.rows_.end());
  return BitMatrix(ncols_, std::move(out));
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (ncols_ != rhs.rows()) throw std::invalid_argument("BitMatrix::operator*: shape mismatch");
  std::vector<Row> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = cdc::apply(rows_[i], rhs.rows_);
  return BitMatrix(rhs.ncols_, std::move(out));
}

BitMatrix BitMatrix::operator^(const BitMatrix& rhs) const {
  if (ncols_ != rhs.ncols_ || rows_.size() != rhs.rows_.size()) {
    throw std::invalid_argument("BitMatrix::operator^: shape mismatch");
  }
  std::vector<Row> out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = rows_[i] ^ rhs.rows_[i];
  return BitMatrix(ncols_, std::move(out));
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (Row r : rows_) {
    std::string s(ncols_, '0');
    for (std::size_t j = 0; j < ncols_; ++j) {
      if ((r >> j) & 1U) s[j] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

RrefResult rref(const BitMatrix& m) {
  std::vector<BitMatrix::Row> rows(m.row_words().begin(), m.row_words().end());
  const std::size_t r = eliminate(rows, m.cols());
  rows.resize(r);
  return {BitMatrix(m.cols(), std::move(rows)), r};
}

std::size_t rank_of(std::span<const BitMatrix::Row> rows) {
  // xor basis keyed by highest set bit
  std::array<BitMatrix::Row, 64> basis;  // only [0, r) is read
  std::size_t r = 0;
  for (BitMatrix::Row x : rows) {
    for (std::size_t i = 0; i < r && x != 0; ++i) x = std::min(x, x ^ basis[i]);
    if (x == 0) continue;
    std::size_t pos = r++;
    while (pos > 0 && basis[pos - 1] < x) {
      basis[pos] = basis[pos - 1];
      --pos;
    }
    basis[pos] = x;
  }
  return r;
}

BitMatrix kernel(const BitMatrix& m) {
  const std::size_t n = m.cols();
  const RrefResult red = rref(m);
  BitMatrix::Row pivots = 0;
  std::vector<std::size_t> pivot_col(red.rank);
  for (std::size_t i = 0; i < red.rank; ++i) {
    pivot_col[i] = static_cast<std::size_t>(std::countr_zero(red.matrix.row(i)));
    pivots |= BitMatrix::Row{1} << pivot_col[i];
  }
  std::vector<BitMatrix::Row> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if ((pivots >> f) & 1U) continue;
    BitMatrix::Row x = BitMatrix::Row{1} << f;
    for (std::size_t i = 0; i < red.rank; ++i) {
      if (red.matrix.get(i, f)) x |= BitMatrix::Row{1} << pivot_col[i];
    }
    basis.push_back(x);
  }
  return rref(BitMatrix(n, std::move(basis))).matrix;
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  if (n > 32) throw std::invalid_argument("inverse: supported up to 32x32");
  // Augment [m | I] in one word per row, eliminate on the left block.
  std::vector<BitMatrix::Row> aug(n);
  for (std::size_t i = 0; i < n; ++i) aug[i] = m.row(i) | (BitMatrix::Row{1} << (n + i));
  if (eliminate(aug, n) != n) return std::nullopt;
  std::vector<BitMatrix::Row> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i] = aug[i] >> n;
  return BitMatrix(n, std::move(inv));
}

}  // namespace cdc
