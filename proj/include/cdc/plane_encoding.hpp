#pragma once

#include <string>
#include <string_view>

#include "cdc/subspace.hpp"

namespace cdc {

/// Decodes a plane of F2^7 from its column digits. The string is left-padded
/// with zeros to 7 digits; digit j is c1 + 2 c2 + 4 c3 for the entries of
/// column j. Throws std::invalid_argument unless the decoded 3 x 7 matrix is
/// in reduced row echelon form with rank 3.
Subspace parse_plane_encoding(std::string_view digits);

/// Inverse of parse_plane_encoding, with leading zeros dropped. Throws
/// std::invalid_argument unless p is a plane of F2^7.
std::string format_plane_encoding(const Subspace& p);

}  // namespace cdc
