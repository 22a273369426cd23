#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cdc/linear_model.hpp"

namespace cdc {

inline constexpr std::size_t kTinySolverLimit = 2000;

struct TinySolution {
  bool feasible = false;
  std::int64_t optimum = 0;  // includes the objective constant
  std::vector<char> x;
  std::vector<std::uint32_t> witness_keys;  // keys of variables at 1
  std::uint64_t nodes = 0;
};

/// Exact 0/1 optimum by branch and bound over the conflict graph of the
/// packing rows, bounded by weighted greedy colorings. Supports
/// non-negative objectives, <= and >= rows with non-negative coefficients,
/// and fixings; integrality flags are ignored. Throws std::length_error above
/// `max_vars` variables and std::invalid_argument for unsupported rows.
TinySolution solve_tiny(const LinearModel& m, std::size_t max_vars = kTinySolverLimit);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator>=(const Rational& a, std::int64_t b) { return a.num >= b * a.den; }
};

/// Objective value of the best uniform point of the relaxation: fixed
/// variables at their value, every other variable at the same lambda in
/// [0, 1]. A lower bound on the LP optimum; nullopt if no such point
/// satisfies the >= rows.
std::optional<Rational> uniform_lp_lower_bound(const LinearModel& m);

}  // namespace cdc
