#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cdc {

enum class Sense { LessEqual, GreaterEqual, Equal };

const char* to_string(Sense s);

struct Constraint {
  /// "<family>_<id>", or a bare family name for one-off rows.
  std::string name;
  /// Variable positions, strictly ascending.
  std::vector<std::uint32_t> vars;
  /// Parallel to vars; empty means every coefficient is 1.
  std::vector<std::int64_t> coefs;
  Sense sense = Sense::LessEqual;
  std::int64_t rhs = 0;

  std::int64_t coef(std::size_t i) const { return coefs.empty() ? 1 : coefs[i]; }
  std::string family() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// 0/1 (or relaxed to [0, 1]) maximization model. Variable j is named
/// "x<keys[j]>", where the key is a canonical subspace index.
class LinearModel {
 public:
  LinearModel() = default;
  /// keys must be strictly ascending. Objective coefficients default to 1.
  explicit LinearModel(std::vector<std::uint32_t> keys, bool binary = true);

  std::size_t num_vars() const { return keys_.size(); }
  std::uint32_t key(std::size_t j) const { return keys_[j]; }
  const std::vector<std::uint32_t>& keys() const { return keys_; }
  std::string var_name(std::size_t j) const { return "x" + std::to_string(keys_[j]); }
  std::optional<std::uint32_t> position_of_key(std::uint32_t key) const;

  std::int64_t objective(std::size_t j) const { return objective_[j]; }
  void set_objective(std::size_t j, std::int64_t c) { objective_[j] = c; }
  std::int64_t objective_constant() const { return objective_constant_; }
  void set_objective_constant(std::int64_t c) { objective_constant_ = c; }

  bool is_binary(std::size_t j) const { return binary_[j] != 0; }
  void set_binary(std::size_t j, bool b) { binary_[j] = b ? 1 : 0; }
  /// Drops integrality from every variable.
  void relax();
  bool relaxed() const;

  const std::vector<Constraint>& constraints() const { return constraints_; }
  /// Throws std::invalid_argument on an out-of-range or unsorted variable list.
  void add_constraint(Constraint c);

  /// Variable position -> fixed value (0 or 1).
  const std::map<std::uint32_t, int>& fixings() const { return fixings_; }
  /// Throws std::invalid_argument for a bad position or value, or a
  /// conflicting earlier fixing.
  void fix(std::uint32_t position, int value);

  /// Rows per family, in first-appearance order of the family.
  std::vector<std::pair<std::string, std::size_t>> census() const;
  std::size_t nonzeros() const;

  /// Objective value (with constant) of a 0/1 assignment.
  std::int64_t evaluate(std::span<const char> x) const;
  /// Names of violated rows and fixings (empty when feasible).
  std::vector<std::string> violations(std::span<const char> x) const;

  friend bool operator==(const LinearModel&, const LinearModel&) = default;

 private:
  std::vector<std::uint32_t> keys_;
  std::vector<std::int64_t> objective_;
  std::int64_t objective_constant_ = 0;
  std::vector<char> binary_;
  std::vector<Constraint> constraints_;
  std::map<std::uint32_t, int> fixings_;
};

/// CPLEX-style LP text, one row per line. Fixings become rows named
/// fix_<key>. Binary variables are listed under Binary, the others get
/// 0 <= x <= 1 under Bounds. A nonzero objective constant is written as a
/// leading comment, since the format has no objective offset.
void write_lp(std::ostream& out, const LinearModel& m);
std::string to_lp_text(const LinearModel& m);

/// Reads text produced by write_lp. Throws std::runtime_error naming the line.
LinearModel parse_lp(std::istream& in);
LinearModel parse_lp_text(const std::string& text);

}  // namespace cdc
