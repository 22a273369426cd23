#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdc/bit_matrix.hpp"

namespace cdc {

/// Raised when two subspaces from different ambient spaces are combined.
class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subspace of F2^v held as its canonical RREF generator matrix. Two
/// subspaces are equal iff their generator rows are bitwise equal.
class Subspace {
 public:
  using Row = BitMatrix::Row;

  Subspace() = default;
  /// Row space of the given generators (any spanning set).
  Subspace(std::size_t ambient, std::span<const Row> generators);
  Subspace(std::size_t ambient, std::initializer_list<Row> generators)
      : Subspace(ambient, std::span<const Row>(generators.begin(), generators.size())) {}
  explicit Subspace(const BitMatrix& generators);

  /// Trusted constructor for rows already known to be in RREF.
  static Subspace from_rref(std::size_t ambient, std::vector<Row> rows);
  static Subspace zero(std::size_t ambient) { return from_rref(ambient, {}); }
  static Subspace full(std::size_t ambient);
  /// <e_first, ..., e_last>, 1-based inclusive.
  static Subspace span_of_units(std::size_t ambient, std::size_t first, std::size_t last);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  std::span<const Row> rows() const { return rows_; }
  BitMatrix generators() const { return BitMatrix(ambient_, rows_); }

  bool contains_vector(Row x) const;
  /// True iff other <= *this.
  bool contains(const Subspace& other) const;
  /// Every nonzero vector of the subspace (2^dim - 1 of them).
  std::vector<Row> nonzero_vectors() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Canonical order: ambient, then dimension, then RREF rows compared as
  /// little-endian integers, lexicographically.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.rows_.size() <=> b.rows_.size(); c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

  std::string to_hex() const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Row> rows_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.ambient();
    for (auto r : s.rows()) {
      h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// dim(U + W) for raw generator lists.
std::size_t span_rank(std::span<const Subspace::Row> a, std::span<const Subspace::Row> b);

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
std::size_t intersection_dim(const Subspace& u, const Subspace& w);

/// dim U + dim W - 2 dim(U n W).
std::size_t subspace_distance(const Subspace& u, const Subspace& w);

/// Orthogonal complement under the standard dot product.
Subspace dual(const Subspace& u);

/// Image of u under x -> x * g, g an invertible ambient x ambient matrix.
Subspace transform(const Subspace& u, const BitMatrix& g);

/// U <= X or X <= U.
inline bool incident(const Subspace& u, const Subspace& x) { return x.contains(u) || u.contains(x); }

/// I(collection; pivot).
std::vector<Subspace> incident_set(std::span<const Subspace> collection, const Subspace& pivot);

/// Distinguished point <(0,...,0,1)> of F2^8.
Subspace special_point();
/// Distinguished hyperplane {x : x_8 = 0} of F2^8.
Subspace special_hyperplane();

/// Canonical embedding F2^7 -> special hyperplane of F2^8 (zero 8th coordinate).
Subspace embed_iota(const Subspace& u);
/// Inverse of embed_iota; u must lie in the special hyperplane.
Subspace restrict_iota(const Subspace& u);

/// 8x8 matrix fixing the special hyperplane and mapping p = <(q|1)> to the
/// special point. Throws std::invalid_argument if p is not a point off it.
BitMatrix normalize_point(const Subspace& p);

}  // namespace cdc
