#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cdc/subspace.hpp"

namespace cdc {

/// Every k-subspace of F2^v, in canonical order. Generated from RREF pivot
/// patterns (echelon cells) and sorted once.
std::vector<Subspace> enumerate_grassmannian(std::size_t v, std::size_t k);

/// Canonical enumeration plus a reverse index. The element position is the
/// canonical index used for variable and constraint names.
class Grassmannian {
 public:
  Grassmannian(std::size_t v, std::size_t k);

  std::size_t ambient() const { return v_; }
  std::size_t dim() const { return k_; }
  std::size_t size() const { return elements_.size(); }
  const Subspace& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Subspace>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  std::optional<std::uint32_t> find(const Subspace& s) const;
  /// Throws std::out_of_range if s is not a k-subspace of F2^v.
  std::uint32_t index_of(const Subspace& s) const;

 private:
  std::size_t v_;
  std::size_t k_;
  std::vector<Subspace> elements_;
  std::unordered_map<Subspace, std::uint32_t, SubspaceHash> index_;
};

}  // namespace cdc
