#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace cdc {

/// Simple undirected graph on vertices 0..n-1 with a dense bitset adjacency
/// matrix. No self-loops; adjacency is kept symmetric.
class SearchGraph {
 public:
  using Word = std::uint64_t;

  SearchGraph() = default;
  explicit SearchGraph(std::size_t n);

  std::size_t size() const { return n_; }
  std::size_t words_per_row() const { return stride_; }
  std::span<const Word> row(std::size_t v) const { return {adj_.data() + v * stride_, stride_}; }

  /// Throws std::invalid_argument on a self-loop or out-of-range vertex.
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const { return (adj_[u * stride_ + v / 64] >> (v % 64)) & 1U; }
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  std::vector<std::uint32_t> neighbors(std::size_t v) const;

  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  SearchGraph induced(std::span<const std::uint32_t> vertices) const;

  bool is_clique(std::span<const std::uint32_t> vertices) const;

  /// Writes `p <n> <m>` followed by one `e u v` line per edge (1-based, u < v).
  void write_adjacency(std::ostream& out) const;
  /// Reads the format above; also accepts the DIMACS header `p edge <n> <m>`.
  static SearchGraph read_adjacency(std::istream& in);

  friend bool operator==(const SearchGraph&, const SearchGraph&) = default;

 private:
  friend class GraphRowWriter;
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> adj_;
};

/// Grants row-wise write access so independent workers can fill disjoint
/// rows; the caller is responsible for producing a symmetric relation.
class GraphRowWriter {
 public:
  explicit GraphRowWriter(SearchGraph& g) : g_(g) {}
  void set(std::size_t u, std::size_t v) { g_.adj_[u * g_.stride_ + v / 64] |= SearchGraph::Word{1} << (v % 64); }

 private:
  SearchGraph& g_;
};

}  // namespace cdc
