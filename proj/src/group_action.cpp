#include "cdc/group_action.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace cdc {

GroupAction::GroupAction(std::size_t n, std::vector<Permutation> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& p : generators_) {
    if (p.size() != n_) throw std::invalid_argument("GroupAction: generator has wrong degree");
    std::vector<char> seen(n_, 0);
    for (auto x : p) {
      if (x >= n_ || seen[x]) throw std::invalid_argument("GroupAction: generator is not a permutation");
      seen[x] = 1;
    }
  }
}

GroupAction GroupAction::from_matrices(std::span<const Subspace> domain, std::span<const BitMatrix> generators) {
  std::unordered_map<Subspace, std::uint32_t, SubspaceHash> index;
  for (std::size_t i = 0; i < domain.size(); ++i) index.emplace(domain[i], static_cast<std::uint32_t>(i));
  std::vector<Permutation> perms;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    Permutation p(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      const auto it = index.find(transform(domain[i], generators[g]));
      if (it == index.end()) {
        throw std::invalid_argument("GroupAction: generator " + std::to_string(g) + " moves a domain element outside the domain");
      }
      p[i] = it->second;
    }
    perms.push_back(std::move(p));
  }
  return GroupAction(domain.size(), std::move(perms));
}

bool GroupAction::preserves(const SearchGraph& g) const {
  if (g.size() != n_) return false;
  for (const auto& p : generators_) {
    for (std::size_t u = 0; u < n_; ++u) {
      for (auto v : g.neighbors(u)) {
        if (v > u && !g.has_edge(p[u], p[v])) return false;
      }
    }
  }
  return true;
}

Transversal orbits(const GroupAction& action) {
  const std::size_t n = action.degree();
  std::vector<std::uint32_t> label(n, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> found;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (label[start] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(found.size());
    std::vector<std::uint32_t> orbit{start};
    label[start] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& p : action.generators()) {
        const auto y = p[orbit[head]];
        if (label[y] == UINT32_MAX) {
          label[y] = id;
          orbit.push_back(y);
        }
      }
    }
    found.push_back(std::move(orbit));
  }
  // found is ordered by smallest element, so a stable sort breaks ties by it.
  std::vector<std::uint32_t> order(found.size());
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return found[a].size() > found[b].size(); });
  Transversal t;
  std::vector<std::uint32_t> rank(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<std::uint32_t>(i);
    t.representatives.push_back(found[order[i]].front());
    t.orbit_sizes.push_back(found[order[i]].size());
  }
  t.orbit_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) t.orbit_of[x] = rank[label[x]];
  return t;
}

std::vector<Subproblem> split_subproblems(const SearchGraph& g, const Transversal& t, std::size_t target) {
  if (target == 0) throw std::invalid_argument("split_subproblems: target must be at least 1");
  if (t.orbit_of.size() != g.size()) throw std::invalid_argument("split_subproblems: transversal does not match graph");
  std::vector<Subproblem> out;
  for (std::size_t i = 0; i < t.representatives.size(); ++i) {
    const auto ti = t.representatives[i];
    Subproblem p;
    p.forced = {ti};
    for (auto x : g.neighbors(ti)) {
      if (t.orbit_of[x] >= i) p.vertices.push_back(x);
    }
    p.graph = g.induced(p.vertices);
    p.target = target - 1;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Subproblem> split_trivially(const Subproblem& p) {
  if (p.target == 0) return {p};
  std::vector<Subproblem> out;
  for (std::size_t j = 0; j < p.vertices.size(); ++j) {
    Subproblem s;
    s.forced = p.forced;
    s.forced.push_back(p.vertices[j]);
    std::vector<std::uint32_t> local;
    for (auto x : p.graph.neighbors(j)) {
      if (x > j) {
        local.push_back(x);
        s.vertices.push_back(p.vertices[x]);
      }
    }
    s.graph = p.graph.induced(local);
    s.target = p.target - 1;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Clique> clique_orbit(const GroupAction& action, const Clique& c) {
  Clique start = c;
  std::sort(start.begin(), start.end());
  std::set<Clique> seen{start};
  std::deque<Clique> queue{start};
  while (!queue.empty()) {
    const Clique cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& p : action.generators()) {
      Clique img(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) img[i] = p[cur[i]];
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return {seen.begin(), seen.end()};
}

Clique canonical_clique(const GroupAction& action, const Clique& c) { return clique_orbit(action, c).front(); }

SplitResult split_enumerate(const SearchGraph& g, const GroupAction& action, std::size_t target,
                            const SplitOptions& options) {
  if (action.degree() != g.size()) throw std::invalid_argument("split_enumerate: group degree differs from graph size");
  if (!action.preserves(g)) throw std::invalid_argument("split_enumerate: a generator is not a graph automorphism");
  SplitResult result;
  if (target == 0) {
    result.representatives = {Clique{}};
    if (options.expand_orbits) result.cliques = {Clique{}};
    return result;
  }

  auto items = split_subproblems(g, orbits(action), target);
  for (auto threshold : options.thresholds) {
    std::vector<Subproblem> next;
    for (auto& p : items) {
      if (p.vertices.size() >= threshold) {
        for (auto& s : split_trivially(p)) next.push_back(std::move(s));
      } else {
        next.push_back(std::move(p));
      }
    }
    items = std::move(next);
  }
  result.subproblems = items.size();

  std::vector<std::vector<Clique>> found(items.size());
  const auto count = static_cast<std::ptrdiff_t>(items.size());
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& p = items[static_cast<std::size_t>(i)];
    for (const auto& local : enumerate_cliques(p.graph, p.target, options.clique)) {
      Clique c = p.forced;
      for (auto x : local) c.push_back(p.vertices[x]);
      std::sort(c.begin(), c.end());
      found[static_cast<std::size_t>(i)].push_back(std::move(c));
    }
  }

  std::set<Clique> reps;
  for (const auto& batch : found) {
    for (const auto& c : batch) reps.insert(canonical_clique(action, c));
  }
  result.representatives.assign(reps.begin(), reps.end());
  if (options.expand_orbits) {
    std::set<Clique> all;
    for (const auto& r : result.representatives) {
      for (auto& c : clique_orbit(action, r)) all.insert(std::move(c));
    }
    result.cliques.assign(all.begin(), all.end());
  }
  return result;
}

std::uint64_t matrix_group_order(std::span<const BitMatrix> generators) {
  if (generators.empty()) return 1;
  const std::size_t n = generators.front().rows();
  if (n > 8) throw std::invalid_argument("matrix_group_order: dimension above 8");
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n || !inverse(g)) {
      throw std::invalid_argument("matrix_group_order: generators must be invertible and of equal size");
    }
  }
  const auto pack = [n](const std::array<BitMatrix::Row, 8>& rows) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i) v |= rows[i] << (8 * i);
    return v;
  };
  std::vector<std::array<BitMatrix::Row, 8>> gens;
  for (const auto& g : generators) {
    std::array<BitMatrix::Row, 8> rows{};
    for (std::size_t i = 0; i < n; ++i) rows[i] = g.row(i);
    gens.push_back(rows);
  }
  std::array<BitMatrix::Row, 8> id{};
  for (std::size_t i = 0; i < n; ++i) id[i] = BitMatrix::Row{1} << i;
  std::unordered_set<std::uint64_t> seen{pack(id)};
  std::vector<std::array<BitMatrix::Row, 8>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::array<BitMatrix::Row, 8>> next;
    for (const auto& a : frontier) {
      for (const auto& g : gens) {
        std::array<BitMatrix::Row, 8> prod{};
        for (std::size_t i = 0; i < n; ++i) prod[i] = cdc::apply(a[i], std::span<const BitMatrix::Row>(g.data(), n));
        if (seen.insert(pack(prod)).second) next.push_back(prod);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

std::vector<Permutation> read_permutations(std::istream& in) {
  std::vector<Permutation> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    Permutation p;
    long long x = 0;
    while (fields >> x) {
      if (x < 0) throw std::runtime_error("permutation line " + std::to_string(line_no) + ": negative image");
      p.push_back(static_cast<std::uint32_t>(x));
    }
    if (!fields.eof()) throw std::runtime_error("permutation line " + std::to_string(line_no) + ": not an integer");
    if (!p.empty()) out.push_back(std::move(p));
  }
  return out;
}

void write_permutations(std::ostream& out, std::span<const Permutation> perms) {
  for (const auto& p : perms) {
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
    out << '\n';
  }
}

}  // namespace cdc
