#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "cdc/clique.hpp"
#include "cdc/configurations.hpp"
#include "cdc/extension_graphs.hpp"
#include "cdc/graph.hpp"
#include "cdc/grassmannian.hpp"
#include "cdc/group_action.hpp"
#include "cdc/rank_code.hpp"
#include "graph_oracles.hpp"

using namespace cdc;
using namespace cdc::testing;

namespace {

SearchGraph complete(std::size_t n) {
  SearchGraph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

SearchGraph cycle(std::size_t n) {
  SearchGraph g(n);
  for (std::size_t a = 0; a < n; ++a) g.add_edge(a, (a + 1) % n);
  return g;
}

SearchGraph petersen() {
  SearchGraph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace

TEST(Graph, BasicsAndErrors) {
  auto g = cycle(5);
  EXPECT_EQ(g.edge_count(), 5U);
  EXPECT_TRUE(g.has_edge(4, 0));
  EXPECT_TRUE(g.has_edge(0, 4));
  EXPECT_EQ(g.degree(2), 2U);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(1, 5), std::invalid_argument);
}

TEST(Graph, AdjacencyRoundTrip) {
  std::mt19937_64 rng(31);
  const auto g = random_graph(rng, 70, 0.3);
  std::stringstream s;
  g.write_adjacency(s);
  EXPECT_EQ(SearchGraph::read_adjacency(s), g);
  std::istringstream dimacs("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  const auto h = SearchGraph::read_adjacency(dimacs);
  EXPECT_EQ(h.size(), 3U);
  EXPECT_TRUE(h.has_edge(0, 1));
  EXPECT_FALSE(h.has_edge(0, 2));
}

TEST(MaxClique, SmallGraphs) {
  EXPECT_EQ(max_clique(complete(7)).size, 7U);
  EXPECT_EQ(max_clique(SearchGraph(5)).size, 1U);
  EXPECT_EQ(max_clique(SearchGraph(0)).size, 0U);
  EXPECT_EQ(max_clique(cycle(5)).size, 2U);
  EXPECT_EQ(enumerate_cliques(complete(4), 3).size(), 4U);
  EXPECT_TRUE(enumerate_cliques(petersen(), 3).empty());
}

TEST(MaxClique, AgreesWithSubsetOracle) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 20;
    const auto g = random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    const SubsetOracle oracle(g, 3);
    for (auto ordering : {VertexOrdering::Natural, VertexOrdering::Degeneracy}) {
      for (bool coloring : {false, true}) {
        CliqueOptions o;
        o.ordering = ordering;
        o.coloring_bound = coloring;
        const auto r = max_clique(g, o);
        EXPECT_EQ(r.size, oracle.omega);
        EXPECT_EQ(r.witness.size(), r.size);
        EXPECT_TRUE(g.is_clique(r.witness));
        EXPECT_EQ(enumerate_cliques(g, 3, o), oracle.by_size_cliques);
      }
    }
  }
}

TEST(EnumerateCliques, MaximumCliquesAreCliques) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_graph(rng, 60, 0.5);
    const auto w = max_clique(g).size;
    const auto all = enumerate_cliques(g, w);
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(count_cliques(g, w), all.size());
    for (const auto& c : all) {
      EXPECT_EQ(c.size(), w);
      EXPECT_TRUE(g.is_clique(c));
    }
  }
}

TEST(Orbits, IdentityAndCycle) {
  const auto t = orbits(GroupAction::trivial(5));
  EXPECT_EQ(t.representatives, (std::vector<std::uint32_t>{0, 1, 2, 3, 4}));
  Permutation shift{1, 2, 3, 4, 5, 0};
  const auto c = orbits(GroupAction(6, {shift}));
  EXPECT_EQ(c.orbit_sizes, (std::vector<std::size_t>{6}));
  EXPECT_THROW(GroupAction(3, {Permutation{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(GroupAction(3, {Permutation{0, 1}}), std::invalid_argument);
}

TEST(Orbits, SizesDecreaseAndCover) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 50; ++t) {
    auto [g, pi] = planted(rng, 25, 0.3);
    const auto tr = orbits(GroupAction(25, {pi}));
    EXPECT_TRUE(std::is_sorted(tr.orbit_sizes.rbegin(), tr.orbit_sizes.rend()));
    EXPECT_EQ(std::accumulate(tr.orbit_sizes.begin(), tr.orbit_sizes.end(), std::size_t{0}), 25U);
    for (std::uint32_t x = 0; x < 25; ++x) EXPECT_EQ(tr.orbit_of[pi[x]], tr.orbit_of[x]);
  }
}

TEST(Split, TriangleWithIdentity) {
  const auto r = split_enumerate(complete(3), GroupAction::trivial(3), 3);
  EXPECT_EQ(r.cliques, (std::vector<Clique>{{0, 1, 2}}));
}

TEST(Split, CycleEdges) {
  const auto g = cycle(6);
  const GroupAction rot(6, {Permutation{1, 2, 3, 4, 5, 0}});
  const auto t = orbits(rot);
  EXPECT_EQ(split_subproblems(g, t, 2).size(), 1U);
  const auto r = split_enumerate(g, rot, 2);
  EXPECT_EQ(r.cliques, enumerate_cliques(g, 2));
  EXPECT_EQ(r.cliques.size(), 6U);
}

TEST(Split, PlantedAutomorphismMatchesDirect) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 16 + rng() % 20;
    auto [g, pi] = planted(rng, n, 0.45);
    const GroupAction action(n, {pi});
    ASSERT_TRUE(action.preserves(g));
    const std::size_t target = 3 + rng() % 3;
    const auto direct = enumerate_cliques(g, target);
    SplitOptions o;
    if (t % 3 == 1) o.thresholds = {n / 3};
    o.workers = 1 + t % 3;
    const auto r = split_enumerate(g, action, target, o);
    EXPECT_EQ(r.cliques, direct) << "trial " << t;
    std::set<Clique> reps;
    for (const auto& c : direct) reps.insert(canonical_clique(action, c));
    EXPECT_EQ(r.representatives, std::vector<Clique>(reps.begin(), reps.end()));
  }
}

TEST(Split, WorkerCountDoesNotChangeResult) {
  std::mt19937_64 rng(36);
  auto [g, pi] = planted(rng, 40, 0.5);
  const GroupAction action(40, {pi});
  SplitOptions one;
  one.workers = 1;
  SplitOptions four;
  four.workers = 4;
  four.thresholds = {10, 5};
  EXPECT_EQ(split_enumerate(g, action, 5, one).cliques, split_enumerate(g, action, 5, four).cliques);
}

TEST(Split, RejectsNonAutomorphism) {
  const auto g = cycle(5);
  const GroupAction swap(5, {Permutation{1, 0, 2, 3, 4}});
  EXPECT_THROW(split_enumerate(g, swap, 2), std::invalid_argument);
}

TEST(Permutations, FileRoundTrip) {
  const std::vector<Permutation> perms{{1, 0, 2}, {2, 0, 1}};
  std::stringstream s;
  write_permutations(s, perms);
  EXPECT_EQ(read_permutations(s), perms);
}

TEST(ExtensionGraph, Counts) {
  EXPECT_EQ(solids_through_special_point().size(), 11811U);
  EXPECT_EQ(build_extension_graph({}).graph.size(), 11811U);
  const auto g7 = build_extension_graph(configuration_to_solids(load_configuration(7)));
  EXPECT_EQ(g7.graph.size(), 864U);
  for (const auto& u : g7.vertices) EXPECT_TRUE(u.contains(special_point()));
  for (std::size_t a = 0; a < g7.vertices.size(); a += 37) {
    for (std::size_t b = a + 1; b < g7.vertices.size(); b += 11) {
      EXPECT_EQ(g7.graph.has_edge(a, b), intersect(g7.vertices[a], g7.vertices[b]) == special_point());
    }
  }
  EXPECT_EQ(build_extension_graph(configuration_to_solids(load_configuration(1))).graph.size(), 1231U);
}

TEST(MrdGraph, VerticesAndPerRowCliques) {
  const auto base = last_row_subcode(gabidulin(), 0);
  const auto g = build_mrd_extension_graph(base);
  EXPECT_EQ(g.graph.size(), 1920U);
  for (const auto& m : g.vertices) {
    for (const auto& b : base.words) EXPECT_GE(rank_distance(m, b), 3U);
  }
  for (BitMatrix::Row v = 1; v < 16; v += 5) {
    const auto h = build_mrd_extension_graph(base, v);
    for (const auto& m : h.vertices) EXPECT_EQ(m.row(3), v);
    CliqueOptions o;
    o.ordering = VertexOrdering::Natural;
    EXPECT_GE(max_clique(h.graph, o).size, 16U);
  }
}

TEST(MrdGraph, PackRoundTrip) {
  for (std::uint32_t x = 0; x < 65536; x += 97) {
    EXPECT_EQ(pack_4x4(unpack_4x4(static_cast<std::uint16_t>(x))), x);
  }
}
