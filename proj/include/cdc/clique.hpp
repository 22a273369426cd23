#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cdc/graph.hpp"

namespace cdc {

using Clique = std::vector<std::uint32_t>;

/// Vertex order used by the search. Natural keeps the graph's own order,
/// which matters when the caller has grouped vertices deliberately (for
/// example by a shared matrix row). Degeneracy puts dense cores first.
enum class VertexOrdering { Natural, Degeneracy };

struct CliqueOptions {
  VertexOrdering ordering = VertexOrdering::Degeneracy;
  /// Also bound each node by a greedy coloring of its candidate set.
  bool coloring_bound = true;
  /// Stop after this many cliques (0 = no limit). Enumeration only.
  std::size_t limit = 0;
};

struct CliqueResult {
  std::size_t size = 0;
  Clique witness;  // sorted vertex indices
};

/// Exact maximum clique.
CliqueResult max_clique(const SearchGraph& g, const CliqueOptions& options = {});

/// Every clique with exactly `size` vertices, each sorted, the list in
/// lexicographic order.
std::vector<Clique> enumerate_cliques(const SearchGraph& g, std::size_t size, const CliqueOptions& options = {});

/// Same cliques as enumerate_cliques, streamed in search order. Returning
/// false from the callback stops the search.
void for_each_clique(const SearchGraph& g, std::size_t size, const std::function<bool(const Clique&)>& visit,
                     const CliqueOptions& options = {});

std::size_t count_cliques(const SearchGraph& g, std::size_t size, const CliqueOptions& options = {});

/// The vertex order used for `ordering` (position -> original vertex).
std::vector<std::uint32_t> vertex_order(const SearchGraph& g, VertexOrdering ordering);

}  // namespace cdc
