#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cdc/bounds.hpp"
#include "cdc/codes.hpp"
#include "cdc/grassmannian.hpp"
#include "cdc/subspace.hpp"

using namespace cdc;

namespace {

using Row = Subspace::Row;

// Explicit vector set of the span, zero included.
std::set<Row> span_set(std::span<const Row> gens) {
  std::set<Row> out{0};
  for (auto g : gens) {
    std::set<Row> next = out;
    for (auto x : out) next.insert(x ^ g);
    out = std::move(next);
  }
  return out;
}

std::size_t log2_size(std::size_t n) { return static_cast<std::size_t>(std::countr_zero(n)); }

Subspace random_subspace(std::mt19937_64& rng, std::size_t v, std::size_t max_gens) {
  std::vector<Row> gens(rng() % (max_gens + 1));
  for (auto& g : gens) g = rng() & ((Row{1} << v) - 1);
  return Subspace(v, gens);
}

}  // namespace

TEST(Subspace, CanonicalForm) {
  const Subspace a(4, {0b0011, 0b0110});
  const Subspace b(4, {0b0101, 0b0011, 0b0110});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2U);
  EXPECT_EQ(Subspace(4, {0b0011, 0b0110}).rows()[0] & 1U, 1U);
}

TEST(Distance, Basics) {
  const auto left = Subspace::span_of_units(8, 1, 4);
  const auto right = Subspace::span_of_units(8, 5, 8);
  EXPECT_EQ(subspace_distance(left, left), 0U);
  EXPECT_EQ(subspace_distance(left, right), 8U);
  EXPECT_THROW(subspace_distance(left, Subspace::zero(7)), AmbientMismatch);
}

TEST(Distance, MatchesVectorSetOracle) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const auto u = random_subspace(rng, 6, 4);
    const auto w = random_subspace(rng, 6, 4);
    const auto su = span_set(u.rows());
    const auto sw = span_set(w.rows());
    std::size_t common = 0;
    for (auto x : su) common += sw.count(x);
    const auto meet = log2_size(common);
    EXPECT_EQ(intersection_dim(u, w), meet);
    EXPECT_EQ(subspace_distance(u, w), u.dim() + w.dim() - 2 * meet);
    EXPECT_EQ(intersect(u, w).dim() + sum(u, w).dim(), u.dim() + w.dim());
  }
}

TEST(Distance, TriangleInequality) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 3000; ++t) {
    const auto a = random_subspace(rng, 6, 5);
    const auto b = random_subspace(rng, 6, 5);
    const auto c = random_subspace(rng, 6, 5);
    EXPECT_LE(subspace_distance(a, c), subspace_distance(a, b) + subspace_distance(b, c));
    EXPECT_EQ(subspace_distance(a, b), subspace_distance(b, a));
    EXPECT_EQ(subspace_distance(a, b) == 0, a == b);
  }
}

TEST(SumIntersect, Trivial) {
  const auto u = Subspace::span_of_units(8, 1, 4);
  EXPECT_EQ(intersect(u, u), u);
  EXPECT_EQ(sum(u, u), u);
  const auto w = Subspace::span_of_units(8, 5, 8);
  EXPECT_EQ(intersect(u, w), Subspace::zero(8));
  EXPECT_EQ(sum(u, w), Subspace::full(8));
}

TEST(Dual, Basics) {
  EXPECT_EQ(dual(Subspace::full(5)), Subspace::zero(5));
  EXPECT_EQ(dual(special_hyperplane()), special_point());
  EXPECT_FALSE(special_hyperplane().contains(special_point()));
  std::mt19937_64 rng(13);
  for (int t = 0; t < 2000; ++t) {
    const auto u = random_subspace(rng, 7, 5);
    const auto d = dual(u);
    EXPECT_EQ(d.dim(), 7 - u.dim());
    EXPECT_EQ(dual(d), u);
    for (auto x : u.rows()) {
      for (auto y : d.rows()) EXPECT_FALSE(dot(x, y));
    }
  }
}

TEST(Dual, IsometryAndReversesIncidence) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 2000; ++t) {
    const auto u = random_subspace(rng, 6, 4);
    const auto w = random_subspace(rng, 6, 4);
    EXPECT_EQ(subspace_distance(u, w), subspace_distance(dual(u), dual(w)));
    const auto s = sum(u, w);
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(dual(u).contains(dual(s)));
    EXPECT_EQ(u.contains(w), dual(w).contains(dual(u)));
  }
}

TEST(Grassmannian, Counts) {
  EXPECT_EQ(enumerate_grassmannian(4, 2).size(), 35U);
  EXPECT_EQ(enumerate_grassmannian(5, 0).size(), 1U);
  EXPECT_EQ(enumerate_grassmannian(5, 0)[0], Subspace::zero(5));
  EXPECT_EQ(enumerate_grassmannian(8, 4).size(), 200787U);
  for (std::size_t v = 1; v <= 7; ++v) {
    for (std::size_t k = 0; k <= v; ++k) {
      const auto a = enumerate_grassmannian(v, k);
      EXPECT_EQ(a.size(), gaussian_binomial(v, k, 2));
      EXPECT_EQ(a.size(), enumerate_grassmannian(v, v - k).size());
    }
  }
}

TEST(Grassmannian, SortedDistinctAndDualBijection) {
  const auto planes = enumerate_grassmannian(6, 2);
  EXPECT_TRUE(std::is_sorted(planes.begin(), planes.end()));
  EXPECT_EQ(std::adjacent_find(planes.begin(), planes.end()), planes.end());
  std::set<Subspace> duals;
  for (const auto& p : planes) duals.insert(dual(p));
  const auto fours = enumerate_grassmannian(6, 4);
  EXPECT_EQ(duals, std::set<Subspace>(fours.begin(), fours.end()));
}

TEST(Grassmannian, IndexOf) {
  const Grassmannian g(5, 2);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g.index_of(g[i]), i);
  EXPECT_THROW(g.index_of(Subspace::zero(5)), std::out_of_range);
}

TEST(Incidence, Examples) {
  const auto lines = enumerate_grassmannian(4, 2);
  EXPECT_EQ(incident_set(lines, Subspace::full(4)).size(), 35U);
  EXPECT_EQ(incident_set(lines, Subspace::zero(4)).size(), 35U);
  EXPECT_EQ(incident_set(lines, Subspace(4, {0b0100})).size(), 7U);
}

TEST(Iota, Embedding) {
  EXPECT_EQ(embed_iota(Subspace::zero(7)), Subspace::zero(8));
  EXPECT_EQ(embed_iota(Subspace::full(7)), special_hyperplane());
  EXPECT_THROW(embed_iota(Subspace::zero(8)), std::invalid_argument);
  for (const auto& a : enumerate_grassmannian(7, 3)) {
    const auto e = embed_iota(a);
    EXPECT_EQ(e.dim(), 3U);
    EXPECT_TRUE(special_hyperplane().contains(e));
    EXPECT_EQ(restrict_iota(e), a);
    EXPECT_TRUE(special_hyperplane().contains(embed_iota(dual(a))));
  }
}

TEST(NormalizePoint, EveryPointOffHyperplane) {
  const auto h = special_hyperplane();
  for (Row q = 0; q < 128; ++q) {
    const Subspace p(8, {q | (Row{1} << 7)});
    const auto m = normalize_point(p);
    ASSERT_TRUE(inverse(m).has_value());
    EXPECT_EQ(transform(p, m), special_point());
    EXPECT_EQ(transform(h, m), h);
  }
  EXPECT_EQ(normalize_point(special_point()), BitMatrix::identity(8));
  EXPECT_THROW(normalize_point(Subspace(8, {0b1})), std::invalid_argument);
  EXPECT_THROW(normalize_point(Subspace::span_of_units(8, 7, 8)), std::invalid_argument);
}

TEST(DegreeProfile, SingleSolid) {
  const std::vector<Subspace> one{special_solid()};
  const auto p = degree_profile(one, 8);
  std::size_t ones = 0;
  for (auto d : p.by_point) {
    EXPECT_LE(d, 1U);
    ones += d;
  }
  EXPECT_EQ(ones, 15U);
}

TEST(DegreeProfile, EmptyAndDoubleCount) {
  const auto e = degree_profile(std::vector<Subspace>{}, 8);
  EXPECT_TRUE(std::all_of(e.by_point.begin(), e.by_point.end(), [](auto d) { return d == 0; }));
  EXPECT_TRUE(std::all_of(e.by_hyperplane.begin(), e.by_hyperplane.end(), [](auto d) { return d == 0; }));

  const auto c = lifted_gabidulin();
  const auto p = degree_profile(c);
  std::uint64_t total = 0;
  for (auto d : p.by_point) {
    total += d;
    EXPECT_LE(d, 17U);
  }
  for (auto d : p.by_hyperplane) EXPECT_LE(d, 17U);
  EXPECT_EQ(total, 256U * 15U);
}

TEST(DegreeProfile, MatchesDirectCount) {
  const auto c = extended_lmrd(ExtendedVariant::B);
  const auto p = degree_profile(c);
  for (Row x = 1; x < 256; x += 7) {
    std::uint32_t pts = 0;
    std::uint32_t hyp = 0;
    const Subspace point(8, {x});
    const auto hyper = dual(point);
    for (const auto& w : c.words()) {
      pts += w.contains(point);
      hyp += hyper.contains(w);
    }
    EXPECT_EQ(p.by_point[x - 1], pts);
    EXPECT_EQ(p.by_hyperplane[x - 1], hyp);
  }
}
