#include "cdc/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdc {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("bound arithmetic overflows 64 bits");
  return out;
}

std::uint64_t checked_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) out = checked_mul(out, q);
  return out;
}

// [n 1]_q = (q^n - 1)/(q - 1)
std::uint64_t points(std::uint64_t n, std::uint64_t q) { return (checked_pow(q, n) - 1) / (q - 1); }

void require_prime_power_base(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field size q must be at least 2");
}

std::uint64_t normal_k(std::uint64_t v, std::uint64_t k) { return std::min(k, v - k); }

std::uint64_t base_lookup(const BoundQuery& query, const KnownValueTable& table, std::uint64_t v_prime) {
  const BoundQuery base{query.q, v_prime, query.d, query.d / 2};
  if (auto e = table.lookup(base)) return e->value;
  throw std::invalid_argument("no known value for base A_" + std::to_string(query.q) + "(" + std::to_string(v_prime) +
                              "," + std::to_string(query.d) + ";" + std::to_string(query.d / 2) + ")");
}

// Shared skeleton of both recursive bounds; `step` maps (numerator, k) to
// the level value.
template <typename Step>
std::uint64_t peel(const BoundQuery& query, const KnownValueTable& table, BoundTrace* trace, Step step) {
  query.validate();
  const std::uint64_t k = normal_k(query.v, query.k);
  const std::uint64_t half = query.d / 2;
  const std::uint64_t v_prime = query.v - k + half;
  std::uint64_t value = base_lookup(query, table, v_prime);
  if (trace != nullptr) {
    *trace = BoundTrace{};
    trace->base_v = v_prime;
    trace->base_value = value;
  }
  for (std::uint64_t j = 1; half + j <= k; ++j) {
    BoundLevel level;
    level.v = v_prime + j;
    level.k = half + j;
    level.numerator = checked_mul(points(level.v, query.q), value);
    level.divisor = points(level.k, query.q);
    level.floor_value = level.numerator / level.divisor;
    step(level, query.q);
    value = level.value;
    if (trace != nullptr) trace->levels.push_back(std::move(level));
  }
  return value;
}

}  // namespace

bool BoundQuery::valid() const {
  return q >= 2 && k <= v && d % 2 == 0 && d >= 2 && d <= 2 * std::min(k, v - k);
}

void BoundQuery::validate() const {
  require_prime_power_base(q);
  if (k > v) throw std::invalid_argument("need k <= v in " + to_string());
  if (d % 2 != 0) throw std::invalid_argument("minimum distance must be even in " + to_string());
  if (d < 2 || d > 2 * std::min(k, v - k)) {
    throw std::invalid_argument("need 2 <= d <= 2 min(k, v-k) in " + to_string());
  }
}

std::string BoundQuery::to_string() const {
  return "A_" + std::to_string(q) + "(" + std::to_string(v) + "," + std::to_string(d) + ";" + std::to_string(k) + ")";
}

KnownValueTable KnownValueTable::standard() {
  KnownValueTable t;
  t.add({2, 7, 6, 3}, 17, "classification of (7,17,6;3)_2 codes");
  t.add({2, 8, 6, 3}, 34, "known value A_2(8,6;3)");
  return t;
}

void KnownValueTable::add(const BoundQuery& query, std::uint64_t value, std::string source) {
  entries_[{query.q, query.v, query.d, normal_k(query.v, query.k)}] = Entry{value, std::move(source)};
}

std::optional<KnownValueTable::Entry> KnownValueTable::lookup(const BoundQuery& query) const {
  if (query.k > query.v) return std::nullopt;
  const std::uint64_t k = normal_k(query.v, query.k);
  if (auto it = entries_.find({query.q, query.v, query.d, k}); it != entries_.end()) return it->second;
  if (k >= 1 && query.d == 2 * k && query.v % k == 0) {
    return Entry{(checked_pow(query.q, query.v) - 1) / (checked_pow(query.q, k) - 1), "spread"};
  }
  return std::nullopt;
}

std::uint64_t gaussian_binomial(std::uint64_t v, std::uint64_t k, std::uint64_t q) {
  require_prime_power_base(q);
  if (k > v) return 0;
  k = normal_k(v, k);
  // Running product stays integral: after step i it equals [v-k+i i]_q.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const unsigned __int128 num = checked_pow(q, v - k + i) - 1;
    const unsigned __int128 den = checked_pow(q, i) - 1;
    acc = acc * num;
    acc /= den;
    if (acc > UINT64_MAX) throw std::overflow_error("gaussian_binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t partial_spread_size(std::uint64_t q, std::uint64_t v, std::uint64_t k) {
  require_prime_power_base(q);
  if (k < 2 || k > v || v % k != 1 % k) {
    throw std::invalid_argument("partial_spread_size needs v = 1 mod k and 2 <= k <= v (got v=" + std::to_string(v) +
                                ", k=" + std::to_string(k) + "); use the spread size when k | v");
  }
  return (checked_pow(q, v) - q) / (checked_pow(q, k) - 1) - q + 1;
}

std::uint64_t johnson_iterated(const BoundQuery& query, const KnownValueTable& base, BoundTrace* trace) {
  return peel(query, base, trace, [](BoundLevel& level, std::uint64_t) { level.value = level.floor_value; });
}

std::vector<std::uint64_t> curly_summands(std::uint64_t k, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < k; ++i) out.push_back(checked_mul(checked_pow(q, k - 1 - i), points(i + 1, q)));
  return out;
}

CurlyResult curly_operator(std::uint64_t a, std::uint64_t k, std::uint64_t q) {
  require_prime_power_base(q);
  if (k == 0) throw std::invalid_argument("curly_operator needs k >= 1");
  const std::uint64_t unit = points(k, q);
  const std::vector<std::uint64_t> summands = curly_summands(k, q);

  // representable[r]: r is a non-negative combination of the summands.
  std::vector<char> representable{1};
  auto is_representable = [&](std::uint64_t r) {
    while (representable.size() <= r) {
      const std::uint64_t n = representable.size();
      char ok = 0;
      for (auto s : summands) {
        if (s <= n && representable[n - s]) {
          ok = 1;
          break;
        }
      }
      representable.push_back(ok);
    }
    return representable[r] != 0;
  };

  CurlyResult result;
  for (std::uint64_t b = a / unit + 1; b-- > 0;) {
    const std::uint64_t residual = a - b * unit;
    result.residuals.push_back(residual);
    if (is_representable(residual)) {
      result.value = b;
      return result;
    }
  }
  result.value = 0;
  return result;
}

std::uint64_t improved_bound(const BoundQuery& query, const KnownValueTable& base, BoundTrace* trace) {
  return peel(query, base, trace, [](BoundLevel& level, std::uint64_t q) {
    CurlyResult c = curly_operator(level.numerator, level.k, q);
    level.value = c.value;
    level.residuals = std::move(c.residuals);
  });
}

ResolvedBound resolve_upper_bound(std::uint64_t q, std::uint64_t n, std::uint64_t d, std::uint64_t k,
                                  const KnownValueTable& table) {
  if (k > n) throw std::invalid_argument("resolve_upper_bound: k > n");
  const std::uint64_t kk = normal_k(n, k);
  if (kk == 0 || d > 2 * kk) return {1, true, "at most one codeword"};
  const BoundQuery query{q, n, d, k};
  query.validate();
  if (auto e = table.lookup(query)) return {e->value, true, e->source};
  if (d == 2 * kk && kk >= 2 && n % kk == 1) return {partial_spread_size(q, n, kk), true, "partial spread"};

  KnownValueTable extended = table;
  const std::uint64_t half = d / 2;
  const std::uint64_t v_prime = n - kk + half;
  if (!table.lookup({q, v_prime, d, half})) {
    const ResolvedBound base = resolve_upper_bound(q, v_prime, d, half, table);
    if (!base.exact) throw std::invalid_argument("cannot resolve base value for " + query.to_string());
    extended.add({q, v_prime, d, half}, base.value, base.source);
  }
  return {improved_bound(query, extended), false, "improved Johnson bound"};
}

std::uint64_t incidence_cap(const BoundQuery& query, std::uint64_t dim_x, const KnownValueTable& table) {
  query.validate();
  if (dim_x == 0 || dim_x >= query.v) throw std::invalid_argument("incidence_cap needs 0 < dim X < v");
  if (dim_x >= query.k) return resolve_upper_bound(query.q, dim_x, query.d, query.k, table).value;
  return resolve_upper_bound(query.q, query.v - dim_x, query.d, query.k - dim_x, table).value;
}

}  // namespace cdc
