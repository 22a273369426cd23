#include "cdc/tiny_solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cdc {
namespace {

using Word = std::uint64_t;

struct Row {
  std::vector<std::uint32_t> vars;
  std::vector<std::int64_t> coefs;
  std::int64_t rhs = 0;
  std::int64_t max_coef = 0;
};

struct RowRef {
  std::uint32_t row;
  std::int64_t coef;
};

class TinySearch {
 public:
  explicit TinySearch(const LinearModel& m) : n_(m.num_vars()), w_((n_ + 63) / 64), compat_(n_ * w_, ~Word{0}) {
    weight_.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      weight_[j] = m.objective(j);
      if (weight_[j] < 0) throw std::invalid_argument("solve_tiny: negative objective coefficient");
      clear(compat_.data() + j * w_, j);
    }
    for (std::size_t j = n_; j < w_ * 64; ++j) {
      for (std::size_t i = 0; i < n_; ++i) clear(compat_.data() + i * w_, j);
    }
    var_le_.resize(n_);
    var_ge_.resize(n_);
    for (const auto& c : m.constraints()) {
      if (c.sense == Sense::Equal) throw std::invalid_argument("solve_tiny: equality row " + c.name + " not supported");
      Row r;
      r.rhs = c.rhs;
      for (std::size_t i = 0; i < c.vars.size(); ++i) {
        const auto a = c.coef(i);
        if (a < 0) throw std::invalid_argument("solve_tiny: negative coefficient in " + c.name);
        if (a == 0) continue;
        r.vars.push_back(c.vars[i]);
        r.coefs.push_back(a);
        r.max_coef = std::max(r.max_coef, a);
      }
      auto& rows = c.sense == Sense::LessEqual ? le_ : ge_;
      auto& index = c.sense == Sense::LessEqual ? var_le_ : var_ge_;
      const auto id = static_cast<std::uint32_t>(rows.size());
      for (std::size_t i = 0; i < r.vars.size(); ++i) index[r.vars[i]].push_back({id, r.coefs[i]});
      if (c.sense == Sense::LessEqual) add_conflicts(r);
      rows.push_back(std::move(r));
    }
    slack_.resize(le_.size());
    for (std::size_t r = 0; r < le_.size(); ++r) slack_[r] = le_[r].rhs;
    cover_.assign(ge_.size(), 0);

    std::vector<Word> p(w_, 0);
    for (std::size_t j = 0; j < n_; ++j) set(p.data(), j);
    std::int64_t value = 0;
    bool ok = true;
    for (const auto& [j, v] : m.fixings()) {
      if (v == 0) clear(p.data(), j);
    }
    for (const auto& [j, v] : m.fixings()) {
      if (v != 1) continue;
      if (!test(p.data(), j)) ok = false;
      choose(j, p.data());
      value += weight_[j];
    }
    for (std::size_t r = 0; r < le_.size(); ++r) ok = ok && slack_[r] >= 0;
    if (ok) {
      for (std::size_t r = 0; r < le_.size(); ++r) prune_row(r, p.data());
      expand(p, value);
    }
  }

  bool feasible() const { return best_ != kNone; }
  std::int64_t best() const { return best_; }
  const std::vector<std::uint32_t>& best_set() const { return best_set_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  static constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min();

  static void set(Word* b, std::size_t j) { b[j / 64] |= Word{1} << (j % 64); }
  static void clear(Word* b, std::size_t j) { b[j / 64] &= ~(Word{1} << (j % 64)); }
  static bool test(const Word* b, std::size_t j) { return (b[j / 64] >> (j % 64)) & 1U; }

  void add_conflicts(const Row& r) {
    for (std::size_t a = 0; a < r.vars.size(); ++a) {
      for (std::size_t b = a + 1; b < r.vars.size(); ++b) {
        if (r.coefs[a] + r.coefs[b] > r.rhs) {
          clear(compat_.data() + r.vars[a] * w_, r.vars[b]);
          clear(compat_.data() + r.vars[b] * w_, r.vars[a]);
        }
      }
    }
  }

  // Drops candidates that no longer fit row r.
  void prune_row(std::size_t r, Word* p) const {
    const auto& row = le_[r];
    if (row.max_coef <= slack_[r]) return;
    for (std::size_t i = 0; i < row.vars.size(); ++i) {
      if (row.coefs[i] > slack_[r]) clear(p, row.vars[i]);
    }
  }

  void choose(std::size_t v, Word* p) {
    chosen_.push_back(static_cast<std::uint32_t>(v));
    for (const auto& ref : var_le_[v]) slack_[ref.row] -= ref.coef;
    for (const auto& ref : var_ge_[v]) cover_[ref.row] += ref.coef;
    const Word* nv = compat_.data() + v * w_;
    for (std::size_t x = 0; x < w_; ++x) p[x] &= nv[x];
    for (const auto& ref : var_le_[v]) prune_row(ref.row, p);
  }

  void unchoose(std::size_t v) {
    chosen_.pop_back();
    for (const auto& ref : var_le_[v]) slack_[ref.row] += ref.coef;
    for (const auto& ref : var_ge_[v]) cover_[ref.row] -= ref.coef;
  }

  bool covers_met() const {
    for (std::size_t r = 0; r < ge_.size(); ++r) {
      if (cover_[r] < ge_[r].rhs) return false;
    }
    return true;
  }

  bool covers_reachable(const Word* p) const {
    for (std::size_t r = 0; r < ge_.size(); ++r) {
      std::int64_t reach = cover_[r];
      const auto& row = ge_[r];
      for (std::size_t i = 0; i < row.vars.size() && reach < row.rhs; ++i) {
        if (test(p, row.vars[i])) reach += row.coefs[i];
      }
      if (reach < row.rhs) return false;
    }
    return true;
  }

  // Greedy classes of pairwise conflicting candidates; bound[i] is the sum of
  // the heaviest weight of each class up to the class of order[i].
  void color(const Word* p, std::vector<std::uint32_t>& order, std::vector<std::int64_t>& bound) const {
    std::vector<Word> uncolored(p, p + w_);
    std::vector<Word> open(w_);
    std::int64_t total = 0;
    while (std::any_of(uncolored.begin(), uncolored.end(), [](Word x) { return x != 0; })) {
      open = uncolored;
      const std::size_t start = order.size();
      std::int64_t heaviest = 0;
      for (std::size_t w = 0; w < w_; ++w) {
        while (open[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(open[w]));
          open[w] &= open[w] - 1;
          clear(uncolored.data(), v);
          order.push_back(static_cast<std::uint32_t>(v));
          heaviest = std::max(heaviest, weight_[v]);
          const Word* nv = compat_.data() + v * w_;
          for (std::size_t x = w; x < w_; ++x) open[x] &= ~nv[x];
        }
      }
      total += heaviest;
      bound.insert(bound.end(), order.size() - start, total);
    }
  }

  void expand(const std::vector<Word>& p_in, std::int64_t value) {
    ++nodes_;
    if (value > best_ && covers_met()) {
      best_ = value;
      best_set_ = chosen_;
    }
    if (!covers_reachable(p_in.data())) return;
    std::vector<Word> p = p_in;
    std::vector<std::uint32_t> order;
    std::vector<std::int64_t> bound;
    color(p.data(), order, bound);
    std::vector<Word> next(w_);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (best_ != kNone && value + bound[i] <= best_) return;
      const auto v = order[i];
      next = p;
      choose(v, next.data());
      expand(next, value + weight_[v]);
      unchoose(v);
      clear(p.data(), v);
    }
  }

  std::size_t n_;
  std::size_t w_;
  std::vector<Word> compat_;
  std::vector<std::int64_t> weight_;
  std::vector<Row> le_;
  std::vector<Row> ge_;
  std::vector<std::vector<RowRef>> var_le_;
  std::vector<std::vector<RowRef>> var_ge_;
  std::vector<std::int64_t> slack_;
  std::vector<std::int64_t> cover_;
  std::vector<std::uint32_t> chosen_;
  std::int64_t best_ = kNone;
  std::vector<std::uint32_t> best_set_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

TinySolution solve_tiny(const LinearModel& m, std::size_t max_vars) {
  if (m.num_vars() > max_vars) {
    throw std::length_error("solve_tiny: " + std::to_string(m.num_vars()) + " variables exceed the limit of " +
                            std::to_string(max_vars) + "; export the model with write_lp and use an external solver");
  }
  TinySearch search(m);
  TinySolution s;
  s.nodes = search.nodes();
  s.x.assign(m.num_vars(), 0);
  if (!search.feasible()) return s;
  s.feasible = true;
  s.optimum = search.best() + m.objective_constant();
  for (auto j : search.best_set()) s.x[j] = 1;
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    if (s.x[j]) s.witness_keys.push_back(m.key(j));
  }
  return s;
}

std::optional<Rational> uniform_lp_lower_bound(const LinearModel& m) {
  std::vector<int> fixed(m.num_vars(), -1);
  for (const auto& [j, v] : m.fixings()) fixed[j] = v;
  Rational lambda{1, 1};
  const auto lower = [&](std::int64_t num, std::int64_t den) {
    if (num * lambda.den < lambda.num * den) lambda = {num, den};
  };
  for (const auto& c : m.constraints()) {
    std::int64_t fixed_sum = 0;
    std::int64_t free_sum = 0;
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
      const int f = fixed[c.vars[i]];
      if (f == 1) fixed_sum += c.coef(i);
      if (f == -1) free_sum += c.coef(i);
    }
    if (c.sense == Sense::GreaterEqual) continue;
    if (free_sum <= 0) {
      if (fixed_sum > c.rhs) return std::nullopt;
      continue;
    }
    if (c.rhs - fixed_sum < 0) return std::nullopt;
    lower(c.rhs - fixed_sum, free_sum);
  }
  for (const auto& c : m.constraints()) {
    if (c.sense == Sense::LessEqual) continue;
    // fixed + lambda * free must reach rhs
    std::int64_t fixed_sum = 0;
    std::int64_t free_sum = 0;
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
      const int f = fixed[c.vars[i]];
      if (f == 1) fixed_sum += c.coef(i);
      if (f == -1) free_sum += c.coef(i);
    }
    const std::int64_t lhs_num = fixed_sum * lambda.den + free_sum * lambda.num;
    const std::int64_t rhs_num = c.rhs * lambda.den;
    if (c.sense == Sense::GreaterEqual ? lhs_num < rhs_num : lhs_num != rhs_num) return std::nullopt;
  }
  std::int64_t fixed_obj = m.objective_constant();
  std::int64_t free_obj = 0;
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    if (fixed[j] == 1) fixed_obj += m.objective(j);
    if (fixed[j] == -1) free_obj += m.objective(j);
  }
  Rational out{fixed_obj * lambda.den + free_obj * lambda.num, lambda.den};
  const auto g = std::gcd(out.num, out.den);
  if (g > 1) out = {out.num / g, out.den / g};
  return out;
}

}  // namespace cdc
