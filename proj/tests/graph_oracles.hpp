#pragma once

// Reference implementations shared by the unit and acceptance tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "cdc/clique.hpp"
#include "cdc/graph.hpp"
#include "cdc/group_action.hpp"

namespace cdc::testing {

SearchGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  SearchGraph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

// Every vertex subset as a bitmask; is_clique[m] built from m minus its lowest vertex.
struct SubsetOracle {
  std::size_t omega = 0;
  std::vector<Clique> by_size_cliques;

  SubsetOracle(const SearchGraph& g, std::size_t size) {
    const std::size_t n = g.size();
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (g.has_edge(a, b)) adj[a] |= 1U << b;
      }
    }
    std::vector<char> ok(std::size_t{1} << n, 0);
    ok[0] = 1;
    for (std::uint32_t m = 1; m < (1U << n); ++m) {
      const auto low = static_cast<std::size_t>(std::countr_zero(m));
      const std::uint32_t rest = m & (m - 1);
      ok[m] = ok[rest] && (adj[low] & rest) == rest;
      if (!ok[m]) continue;
      const auto pc = static_cast<std::size_t>(std::popcount(m));
      omega = std::max(omega, pc);
      if (pc == size) {
        Clique c;
        for (std::uint32_t x = m; x; x &= x - 1) c.push_back(static_cast<std::uint32_t>(std::countr_zero(x)));
        by_size_cliques.push_back(c);
      }
    }
    std::sort(by_size_cliques.begin(), by_size_cliques.end());
  }
};

// Random graph invariant under a random permutation: edges are added as
// whole orbits of the generated cyclic group.
std::pair<SearchGraph, Permutation> planted(std::mt19937_64& rng, std::size_t n, double p) {
  Permutation pi(n);
  std::iota(pi.begin(), pi.end(), 0U);
  // Disjoint 2- and 3-cycles on a random prefix.
  std::vector<std::uint32_t> pts(n);
  std::iota(pts.begin(), pts.end(), 0U);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::size_t i = 0;
  while (i + 3 <= n && i < n / 2) {
    if (rng() % 2) {
      pi[pts[i]] = pts[i + 1];
      pi[pts[i + 1]] = pts[i];
      i += 2;
    } else {
      pi[pts[i]] = pts[i + 1];
      pi[pts[i + 1]] = pts[i + 2];
      pi[pts[i + 2]] = pts[i];
      i += 3;
    }
  }
  SearchGraph g(n);
  std::bernoulli_distribution coin(p);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (!coin(rng)) continue;
      std::uint32_t x = a;
      std::uint32_t y = b;
      for (int k = 0; k < 6; ++k) {
        if (x != y) g.add_edge(x, y);
        x = pi[x];
        y = pi[y];
      }
    }
  }
  return {g, pi};
}

}  // namespace cdc::testing
