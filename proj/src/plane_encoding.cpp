#include "cdc/plane_encoding.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cdc {

Subspace parse_plane_encoding(std::string_view digits) {
  if (digits.empty() || digits.size() > 7) {
    throw std::invalid_argument("plane encoding: expected 1 to 7 digits, got '" + std::string(digits) + "'");
  }
  std::vector<Subspace::Row> rows(3, 0);
  const std::size_t pad = 7 - digits.size();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char ch = digits[i];
    if (ch < '0' || ch > '7') throw std::invalid_argument("plane encoding: bad digit in '" + std::string(digits) + "'");
    const unsigned value = static_cast<unsigned>(ch - '0');
    const std::size_t col = pad + i;
    for (std::size_t r = 0; r < 3; ++r) {
      if ((value >> r) & 1U) rows[r] |= Subspace::Row{1} << col;
    }
  }
  Subspace plane(7, rows);
  if (plane.dim() != 3) throw std::invalid_argument("plane encoding: '" + std::string(digits) + "' has rank below 3");
  if (!std::equal(rows.begin(), rows.end(), plane.rows().begin())) {
    throw std::invalid_argument("plane encoding: '" + std::string(digits) + "' is not in reduced row echelon form");
  }
  return plane;
}

std::string format_plane_encoding(const Subspace& p) {
  if (p.ambient() != 7 || p.dim() != 3) throw std::invalid_argument("plane encoding: need a plane of F2^7");
  std::string out;
  for (std::size_t col = 0; col < 7; ++col) {
    unsigned value = 0;
    for (std::size_t r = 0; r < 3; ++r) value |= static_cast<unsigned>((p.rows()[r] >> col) & 1U) << r;
    if (out.empty() && value == 0) continue;
    out += static_cast<char>('0' + value);
  }
  return out;
}

}  // namespace cdc
