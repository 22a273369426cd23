#include <gtest/gtest.h>

#include "cdc/bounds.hpp"
#include "cdc/grassmannian.hpp"

using namespace cdc;

namespace {

// Representable as a non-negative combination of the summands, by trying
// every multiplicity vector.
bool brute_representable(std::uint64_t r, const std::vector<std::uint64_t>& s, std::size_t i = 0) {
  if (r == 0) return true;
  if (i == s.size()) return false;
  for (std::uint64_t m = 0; m * s[i] <= r; ++m) {
    if (brute_representable(r - m * s[i], s, i + 1)) return true;
  }
  return false;
}

std::uint64_t brute_curly(std::uint64_t a, std::uint64_t k, std::uint64_t q) {
  std::vector<std::uint64_t> s;
  std::uint64_t qk1 = 0;
  for (std::uint64_t i = 0, p = 1; i < k; ++i, p *= q) qk1 += p;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t top = 1;
    for (std::uint64_t j = 0; j < k - 1 - i; ++j) top *= q;
    std::uint64_t sum = 0;
    for (std::uint64_t j = 0, p = 1; j <= i; ++j, p *= q) sum += p;
    s.push_back(top * sum);
  }
  for (std::uint64_t b = a / qk1 + 1; b-- > 0;) {
    if (brute_representable(a - b * qk1, s)) return b;
  }
  return 0;
}

}  // namespace

TEST(GaussianBinomial, Values) {
  EXPECT_EQ(gaussian_binomial(7, 0, 2), 1U);
  EXPECT_EQ(gaussian_binomial(4, 1, 2), 15U);
  EXPECT_EQ(gaussian_binomial(8, 4, 2), 200787U);
  EXPECT_EQ(gaussian_binomial(8, 2, 2), 10795U);
  for (std::uint64_t q : {2, 3}) {
    for (std::uint64_t v = 0; v <= 12; ++v) {
      for (std::uint64_t k = 0; k <= v; ++k) EXPECT_EQ(gaussian_binomial(v, k, q), gaussian_binomial(v, v - k, q));
    }
  }
}

TEST(GaussianBinomial, MatchesEnumeration) {
  for (std::size_t v = 1; v <= 6; ++v) {
    for (std::size_t k = 0; k <= v; ++k) EXPECT_EQ(gaussian_binomial(v, k, 2), enumerate_grassmannian(v, k).size());
  }
}

TEST(PartialSpread, Values) {
  EXPECT_EQ(partial_spread_size(2, 7, 3), 17U);
  EXPECT_EQ(partial_spread_size(2, 5, 2), 9U);
  EXPECT_EQ(partial_spread_size(2, 9, 4), 33U);
  EXPECT_ANY_THROW(partial_spread_size(2, 8, 3));
  const auto table = KnownValueTable::standard();
  EXPECT_EQ(table.lookup({2, 7, 6, 3})->value, partial_spread_size(2, 7, 3));
  EXPECT_EQ(table.lookup({2, 8, 6, 3})->value, 34U);
}

TEST(Johnson, Values) {
  const auto table = KnownValueTable::standard();
  EXPECT_EQ(johnson_iterated({2, 8, 6, 4}, table), 289U);
  EXPECT_EQ(johnson_iterated({2, 7, 6, 3}, table), 17U);
  EXPECT_EQ(johnson_iterated({2, 9, 6, 4}, table), 1158U);
  EXPECT_THROW(johnson_iterated({2, 12, 6, 5}, KnownValueTable{}), std::invalid_argument);
}

TEST(Curly, Examples) {
  EXPECT_EQ(curly_summands(4, 2), (std::vector<std::uint64_t>{8, 12, 14, 15}));
  const auto r = curly_operator(17374, 4, 2);
  EXPECT_EQ(r.value, 1156U);
  EXPECT_EQ(r.residuals, (std::vector<std::uint64_t>{4, 19, 34}));
  EXPECT_EQ(curly_operator(0, 4, 2).value, 0U);
  EXPECT_EQ(curly_operator(15, 4, 2).value, 1U);
}

TEST(Curly, MatchesBruteForce) {
  for (std::uint64_t k = 2; k <= 4; ++k) {
    for (std::uint64_t a = 0; a < 400; ++a) EXPECT_EQ(curly_operator(a, k, 2).value, brute_curly(a, k, 2)) << a;
  }
  for (std::uint64_t a = 0; a < 300; ++a) EXPECT_EQ(curly_operator(a, 3, 3).value, brute_curly(a, 3, 3)) << a;
}

TEST(Curly, MultiplesAreExact) {
  for (std::uint64_t b = 0; b < 100; ++b) {
    EXPECT_GE(curly_operator(b * 15, 4, 2).value, b);
    EXPECT_GE(curly_operator(b * 13, 3, 3).value, b);
  }
}

TEST(Improved, ValuesAndTrace) {
  const auto table = KnownValueTable::standard();
  BoundTrace trace;
  EXPECT_EQ(improved_bound({2, 9, 6, 4}, table, &trace), 1156U);
  ASSERT_EQ(trace.levels.size(), 1U);
  EXPECT_EQ(trace.base_value, 34U);
  EXPECT_EQ(trace.levels[0].numerator, 17374U);
  EXPECT_EQ(trace.levels[0].floor_value, 1158U);
  EXPECT_EQ(trace.levels[0].residuals, (std::vector<std::uint64_t>{4, 19, 34}));
  EXPECT_EQ(improved_bound({2, 8, 6, 4}, table), 289U);
  EXPECT_EQ(improved_bound({2, 7, 6, 3}, table), 17U);
}

TEST(Improved, NeverAboveJohnson) {
  const auto table = KnownValueTable::standard();
  for (std::uint64_t v = 4; v <= 14; ++v) {
    for (std::uint64_t k = 2; k <= v - 2; ++k) {
      for (std::uint64_t d = 4; d <= 2 * std::min(k, v - k); d += 2) {
        const BoundQuery q{2, v, d, k};
        try {
          EXPECT_LE(improved_bound(q, table), johnson_iterated(q, table)) << q.to_string();
        } catch (const std::invalid_argument&) {
          // no base value for this query
        } catch (const std::overflow_error&) {
        }
      }
    }
  }
}

TEST(Query, Window) {
  EXPECT_TRUE((BoundQuery{2, 8, 6, 4}.valid()));
  EXPECT_FALSE((BoundQuery{2, 8, 5, 4}.valid()));
  EXPECT_FALSE((BoundQuery{2, 8, 10, 4}.valid()));
  EXPECT_THROW((BoundQuery{2, 8, 0, 4}.validate()), std::invalid_argument);
}

TEST(IncidenceCap, Values) {
  const auto table = KnownValueTable::standard();
  const BoundQuery q{2, 8, 6, 4};
  EXPECT_EQ(incidence_cap(q, 7, table), 17U);
  EXPECT_EQ(incidence_cap(q, 1, table), 17U);
  EXPECT_EQ(incidence_cap(q, 6, table), 1U);
}

TEST(IncidenceCap, SixSpaceHoldsOneSolidPerCode) {
  // Two solids of F2^6 always share a line.
  const auto solids = enumerate_grassmannian(6, 4);
  for (std::size_t i = 0; i < solids.size(); i += 11) {
    for (std::size_t j = i + 1; j < solids.size(); j += 7) EXPECT_LT(subspace_distance(solids[i], solids[j]), 6U);
  }
}
