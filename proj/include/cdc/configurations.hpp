#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cdc/subspace.hpp"

namespace cdc {

/// The 38 hyperplane configurations: sets of 16 or 17 pairwise disjoint
/// planes of F2^7, shipped as embedded digit strings.
inline constexpr std::size_t kConfigurationCount = 38;

/// Declared size (16 or 17) of configuration `index`, 1-based.
std::size_t configuration_type(std::size_t index);

/// The comma-separated digit strings of configuration `index`, verbatim.
std::string configuration_text(std::size_t index);

/// Parses a comma-separated list of plane encodings.
std::vector<Subspace> parse_plane_list(const std::string& text);

/// Parsed planes of configuration `index` in listed order. Throws
/// std::out_of_range for a bad index and std::runtime_error if the row fails
/// the size or pairwise-disjointness check.
std::vector<Subspace> load_configuration(std::size_t index);

/// True iff every pair of planes meets trivially.
bool pairwise_disjoint(std::span<const Subspace> planes);

/// {iota(A^perp) : A in planes}: solids of F2^8 inside the special hyperplane.
std::vector<Subspace> configuration_to_solids(std::span<const Subspace> planes);

/// {A^perp : A in planes}: solids of F2^7.
std::vector<Subspace> dual_solids(std::span<const Subspace> planes);

}  // namespace cdc
