#include "cdc/clique.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace cdc {
namespace {

using Word = SearchGraph::Word;

// Branch and bound over a reordered bitset copy of the graph. suffix_[i] is
// the clique number of the subgraph on positions i..n-1 (Ostergard), which
// gives the bound |C| + suffix_[v] for any extension starting at v.
class Engine {
 public:
  Engine(const SearchGraph& g, const CliqueOptions& options)
      : order_(vertex_order(g, options.ordering)),
        n_(g.size()),
        w_((n_ + 63) / 64),
        adj_(n_ * w_, 0),
        suffix_(n_ + 1, 0),
        coloring_(options.coloring_bound) {
    std::vector<std::uint32_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto row = g.row(order_[i]);
      for (std::size_t w = 0; w < row.size(); ++w) {
        for (Word bits = row[w]; bits != 0; bits &= bits - 1) {
          const std::size_t u = pos[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
          adj_[i * w_ + u / 64] |= Word{1} << (u % 64);
        }
      }
    }
    scratch_a_.resize(w_);
    scratch_b_.resize(w_);
  }

  // Fills suffix_ and returns a maximum clique in original labels.
  Clique solve_max() {
    Clique best_clique;
    for (std::size_t i = n_; i-- > 0;) {
      const std::size_t best = suffix_[i + 1];
      suffix_[i] = best;
      ensure_depth(1);
      Word* p = level(1);
      for (std::size_t w = 0; w < w_; ++w) p[w] = adj_[i * w_ + w] & above_mask(i, w);
      stack_[0] = static_cast<std::uint32_t>(i);
      bool found = false;
      expand(1, p, best + 1, [&] {
        found = true;
        return false;
      });
      if (found) {
        suffix_[i] = best + 1;
        best_clique = to_original(best + 1);
      }
    }
    solved_ = true;
    return best_clique;
  }

  std::size_t clique_number() const { return n_ == 0 ? 0 : suffix_[0]; }

  template <typename Visit>
  void enumerate(std::size_t size, Visit&& visit) {
    if (!solved_) solve_max();
    if (size == 0) {
      visit(Clique{});
      return;
    }
    if (size > clique_number()) return;
    ensure_depth(0);
    Word* p = level(0);
    std::fill(p, p + w_, Word{0});
    for (std::size_t i = 0; i < n_; ++i) p[i / 64] |= Word{1} << (i % 64);
    expand(0, p, size, [&] { return visit(to_original(size)); });
  }

 private:
  static Word above_mask(std::size_t i, std::size_t w) {
    const std::size_t first = i + 1;
    if (w * 64 >= first) return ~Word{0};
    if ((w + 1) * 64 <= first) return 0;
    return ~Word{0} << (first - w * 64);
  }

  void ensure_depth(std::size_t depth) {
    while (levels_.size() < 2 * (depth + 1)) levels_.emplace_back(w_, 0);
    if (stack_.size() < depth + 1) stack_.resize(depth + 1);
  }
  Word* level(std::size_t depth) { return levels_[2 * depth].data(); }
  Word* work(std::size_t depth) { return levels_[2 * depth + 1].data(); }

  std::size_t popcount(const Word* p) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < w_; ++w) c += static_cast<std::size_t>(std::popcount(p[w]));
    return c;
  }

  // Greedy coloring of p; stops once `needed` colors are used.
  std::size_t colors_at_least(const Word* p, std::size_t needed) {
    Word* uncolored = scratch_a_.data();
    Word* open = scratch_b_.data();
    std::copy(p, p + w_, uncolored);
    std::size_t colors = 0;
    std::size_t first_word = 0;
    while (true) {
      while (first_word < w_ && uncolored[first_word] == 0) ++first_word;
      if (first_word == w_) return colors;
      if (++colors >= needed) return colors;
      std::copy(uncolored, uncolored + w_, open);
      for (std::size_t w = first_word; w < w_; ++w) {
        while (open[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(open[w]));
          const Word bit = Word{1} << (v % 64);
          open[w] &= ~bit;
          uncolored[w] &= ~bit;
          const Word* nv = adj_.data() + v * w_;
          for (std::size_t x = w; x < w_; ++x) open[x] &= ~nv[x];
        }
      }
    }
  }

  template <typename Visit>
  bool expand(std::size_t depth, const Word* p, std::size_t target, Visit&& visit) {
    if (depth == target) return visit();
    const std::size_t need = target - depth;
    std::size_t remaining = popcount(p);
    if (remaining < need) return true;
    if (coloring_ && need > 1 && colors_at_least(p, need) < need) return true;
    ensure_depth(depth + 1);
    Word* q = work(depth);
    std::copy(p, p + w_, q);
    for (std::size_t w = 0; w < w_; ++w) {
      while (q[w] != 0) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
        if (remaining < need || depth + suffix_[v] < target) return true;
        q[w] &= q[w] - 1;
        --remaining;
        stack_[depth] = static_cast<std::uint32_t>(v);
        Word* next = level(depth + 1);
        const Word* nv = adj_.data() + v * w_;
        bool any = false;
        for (std::size_t x = 0; x < w_; ++x) {
          next[x] = q[x] & nv[x];
          any |= next[x] != 0;
        }
        if (!any && need > 1) continue;
        if (!expand(depth + 1, next, target, visit)) return false;
      }
    }
    return true;
  }

  Clique to_original(std::size_t size) const {
    Clique c(size);
    for (std::size_t i = 0; i < size; ++i) c[i] = order_[stack_[i]];
    std::sort(c.begin(), c.end());
    return c;
  }

  std::vector<std::uint32_t> order_;
  std::size_t n_;
  std::size_t w_;
  std::vector<Word> adj_;
  std::vector<std::size_t> suffix_;
  bool coloring_;
  bool solved_ = false;
  std::vector<std::vector<Word>> levels_;
  std::vector<std::uint32_t> stack_;
  std::vector<Word> scratch_a_;
  std::vector<Word> scratch_b_;
};

}  // namespace

std::vector<std::uint32_t> vertex_order(const SearchGraph& g, VertexOrdering ordering) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
  if (ordering == VertexOrdering::Natural || n == 0) return order;

  // Smallest-last removal, then reversed so the last-removed core leads.
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<char> removed(n, 0);
  std::vector<std::uint32_t> removal;
  removal.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = 1;
    removal.push_back(static_cast<std::uint32_t>(pick));
    for (auto u : g.neighbors(pick)) {
      if (!removed[u]) --degree[u];
    }
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

CliqueResult max_clique(const SearchGraph& g, const CliqueOptions& options) {
  Engine engine(g, options);
  auto witness = engine.solve_max();
  return CliqueResult{engine.clique_number(), std::move(witness)};
}

void for_each_clique(const SearchGraph& g, std::size_t size, const std::function<bool(const Clique&)>& visit,
                     const CliqueOptions& options) {
  Engine engine(g, options);
  std::size_t emitted = 0;
  engine.enumerate(size, [&](const Clique& c) {
    ++emitted;
    if (!visit(c)) return false;
    return options.limit == 0 || emitted < options.limit;
  });
}

std::vector<Clique> enumerate_cliques(const SearchGraph& g, std::size_t size, const CliqueOptions& options) {
  std::vector<Clique> out;
  for_each_clique(
      g, size,
      [&](const Clique& c) {
        out.push_back(c);
        return true;
      },
      options);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_cliques(const SearchGraph& g, std::size_t size, const CliqueOptions& options) {
  std::size_t count = 0;
  for_each_clique(
      g, size,
      [&](const Clique&) {
        ++count;
        return true;
      },
      options);
  return count;
}

}  // namespace cdc
