#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace cdc {

/// Parameters (q, v, d; k) of A_q(v, d; k). Valid when d is even and
/// 2 <= d <= 2 min(k, v - k).
struct BoundQuery {
  std::uint64_t q = 2;
  std::uint64_t v = 0;
  std::uint64_t d = 0;
  std::uint64_t k = 0;

  bool valid() const;
  /// Throws std::invalid_argument describing the violated condition.
  void validate() const;
  std::string to_string() const;
};

/// Exact values of A_q(v, d; k), keyed by (q, v, d, min(k, v - k)).
class KnownValueTable {
 public:
  struct Entry {
    std::uint64_t value;
    std::string source;
  };

  /// A_2(7,6;3) = 17 and A_2(8,6;3) = 34; spreads are answered implicitly.
  static KnownValueTable standard();

  void add(const BoundQuery& query, std::uint64_t value, std::string source);
  /// Explicit entries first, then spread sizes (q^v - 1)/(q^k - 1) when d = 2k and k | v.
  std::optional<Entry> lookup(const BoundQuery& query) const;

 private:
  std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t>, Entry> entries_;
};

/// Gaussian binomial [v k]_q; throws std::overflow_error beyond 64 bits.
std::uint64_t gaussian_binomial(std::uint64_t v, std::uint64_t k, std::uint64_t q);

/// A_q(v, 2k; k) = (q^v - q)/(q^k - 1) - q + 1 for v = 1 mod k, 2 <= k <= v.
std::uint64_t partial_spread_size(std::uint64_t q, std::uint64_t v, std::uint64_t k);

/// One peeling step of the recursive bounds: a = [v 1]_q * inner, divided
/// by [k 1]_q.
struct BoundLevel {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t numerator = 0;
  std::uint64_t divisor = 0;
  std::uint64_t floor_value = 0;
  std::uint64_t value = 0;
  /// Residuals a - b [k 1]_q examined by the representability test, largest b first.
  std::vector<std::uint64_t> residuals;
};

struct BoundTrace {
  std::uint64_t base_v = 0;
  std::uint64_t base_value = 0;
  std::vector<BoundLevel> levels;
};

/// Iterated Johnson bound, floors nested down to v' = v - k + d/2.
/// The table must supply A_q(v', d; d/2).
std::uint64_t johnson_iterated(const BoundQuery& query, const KnownValueTable& base, BoundTrace* trace = nullptr);

struct CurlyResult {
  std::uint64_t value = 0;
  std::vector<std::uint64_t> residuals;
};

/// Largest b with a - b [k 1]_q a non-negative integer combination of
/// q^(k-1-i) (q^(i+1) - 1)/(q - 1), 0 <= i < k.
CurlyResult curly_operator(std::uint64_t a, std::uint64_t k, std::uint64_t q);

/// Summands q^(k-1-i) [i+1 1]_q in increasing i.
std::vector<std::uint64_t> curly_summands(std::uint64_t k, std::uint64_t q);

/// Nested representability bound; never exceeds johnson_iterated.
std::uint64_t improved_bound(const BoundQuery& query, const KnownValueTable& base, BoundTrace* trace = nullptr);

struct ResolvedBound {
  std::uint64_t value = 0;
  bool exact = false;
  std::string source;
};

/// Best available upper bound (exact where known) for A_q(n, d; k), for any
/// 0 <= k <= n. Trivial cases (d > 2 min(k, n - k)) give 1.
ResolvedBound resolve_upper_bound(std::uint64_t q, std::uint64_t n, std::uint64_t d, std::uint64_t k,
                                  const KnownValueTable& table);

/// Cap on #I(C; X) for dim X = dim_x: A_q(dim_x, d; k) if dim_x >= k, else
/// A_q(v - dim_x, d; k - dim_x).
std::uint64_t incidence_cap(const BoundQuery& query, std::uint64_t dim_x, const KnownValueTable& table);

}  // namespace cdc
