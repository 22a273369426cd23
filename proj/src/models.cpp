#include "cdc/models.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cdc/bounds.hpp"
#include "cdc/clique.hpp"

namespace cdc {
namespace {

// All j-subspaces of the row space of `basis`, canonical.
std::vector<Subspace> subspaces_of(std::size_t ambient, std::span<const Subspace::Row> basis,
                                   const std::vector<Subspace>& coordinate_spaces) {
  std::vector<Subspace> out;
  out.reserve(coordinate_spaces.size());
  std::vector<Subspace::Row> gens;
  for (const auto& c : coordinate_spaces) {
    gens.clear();
    for (auto r : c.rows()) gens.push_back(cdc::apply(r, basis));
    out.emplace_back(ambient, gens);
  }
  return out;
}

std::string row_name(std::size_t w, std::size_t index) {
  return "w" + std::to_string(w) + "_" + std::to_string(index);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> incidence_lists(std::span<const Subspace> vars, const Grassmannian& family) {
  const std::size_t v = family.ambient();
  const std::size_t w = family.dim();
  std::vector<std::vector<std::uint32_t>> lists(family.size());
  if (vars.empty()) return lists;

  std::unordered_map<Subspace, std::uint32_t, SubspaceHash> dual_index;
  const bool upward = w > vars.front().dim();
  if (upward) {
    for (std::size_t i = 0; i < family.size(); ++i) dual_index.emplace(dual(family[i]), static_cast<std::uint32_t>(i));
  }

  std::map<std::size_t, std::vector<Subspace>> coordinates;
  for (const auto& u : vars) {
    if (u.ambient() != v) throw AmbientMismatch("incidence_lists: variable outside the family's ambient space");
    const std::size_t m = upward ? v - u.dim() : u.dim();
    const std::size_t j = upward ? v - w : w;
    if (j > m) throw std::invalid_argument("incidence_lists: mixed dimensions");
    if (!coordinates.count(m)) coordinates.emplace(m, enumerate_grassmannian(m, j));
  }

  const auto n = static_cast<std::ptrdiff_t>(vars.size());
  std::vector<std::vector<std::uint32_t>> hits(vars.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t p = 0; p < n; ++p) {
    const auto& u = vars[static_cast<std::size_t>(p)];
    auto& out = hits[static_cast<std::size_t>(p)];
    if (upward) {
      const auto ud = dual(u);
      for (const auto& x : subspaces_of(v, ud.rows(), coordinates.at(ud.dim()))) out.push_back(dual_index.at(x));
    } else {
      for (const auto& x : subspaces_of(v, u.rows(), coordinates.at(u.dim()))) out.push_back(*family.find(x));
    }
  }
  for (std::size_t p = 0; p < hits.size(); ++p) {
    for (auto i : hits[p]) lists[i].push_back(static_cast<std::uint32_t>(p));
  }
  return lists;
}

LinearModel build_packing_model(std::size_t v, std::size_t k, std::size_t d, std::span<const Subspace> F,
                                std::int64_t f, bool relax) {
  BoundQuery{2, v, d, k}.validate();
  if (f < 0) throw std::invalid_argument("packing model: f must be non-negative");
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].ambient() != v || F[i].dim() != k) throw std::invalid_argument("packing model: F holds a non-k-space");
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      if (subspace_distance(F[i], F[j]) < d) {
        throw std::invalid_argument("packing model: two members of F are at distance below " + std::to_string(d));
      }
    }
  }

  const Grassmannian vars(v, k);
  std::vector<std::uint32_t> keys(vars.size());
  for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = static_cast<std::uint32_t>(i);
  LinearModel m(std::move(keys), !relax);

  const std::size_t t = k - d / 2 + 1;
  std::map<std::size_t, std::int64_t> rhs;
  const auto add = [&](std::size_t w, std::int64_t r) {
    auto [it, inserted] = rhs.emplace(w, r);
    if (!inserted) it->second = std::min(it->second, r);
  };
  add(1, f);
  add(v - 1, f);
  add(t, 1);
  add(2 * k - t, 1);

  for (const auto& [w, r] : rhs) {
    const Grassmannian family(v, w);
    auto lists = incidence_lists(vars.elements(), family);
    for (std::size_t i = 0; i < lists.size(); ++i) {
      m.add_constraint(Constraint{row_name(w, i), std::move(lists[i]), {}, Sense::LessEqual, r});
    }
  }
  for (const auto& u : F) m.fix(vars.index_of(u), 1);
  return m;
}

LinearModel build_lemma6_model(std::span<const Subspace> F, std::int64_t f, bool relax) {
  return build_packing_model(8, 4, 6, F, f, relax);
}

std::vector<Subspace> var7(std::span<const Subspace> F) {
  std::vector<Subspace> out;
  for (const auto& u : enumerate_grassmannian(7, 3)) {
    if (std::all_of(F.begin(), F.end(), [&](const Subspace& s) { return intersection_dim(u, s) <= 1; })) {
      out.push_back(u);
    }
  }
  return out;
}

namespace {

std::size_t omega_of_planes(std::span<const Subspace> planes) {
  SearchGraph g(planes.size());
  for (std::size_t a = 0; a < planes.size(); ++a) {
    for (std::size_t b = a + 1; b < planes.size(); ++b) {
      if (intersection_dim(planes[a], planes[b]) <= 1) g.add_edge(a, b);
    }
  }
  return max_clique(g).size;
}

void check_solids7(std::span<const Subspace> F) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].ambient() != 7 || F[i].dim() != 4) throw std::invalid_argument("F must consist of solids of F2^7");
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      if (intersection_dim(F[i], F[j]) > 1) throw std::invalid_argument("two members of F meet in more than a point");
    }
  }
}

}  // namespace

std::size_t omega(std::span<const Subspace> F, const Subspace& W) {
  check_solids7(F);
  if (W.ambient() != 7 || W.dim() != 5) throw std::invalid_argument("omega: W must be a 5-space of F2^7");
  for (const auto& s : F) {
    if (W.contains(s)) throw std::invalid_argument("omega: W contains a member of F");
  }
  std::vector<Subspace> inside;
  for (const auto& u : var7(F)) {
    if (W.contains(u)) inside.push_back(u);
  }
  return omega_of_planes(inside);
}

LinearModel build_lemma7_model(std::span<const Subspace> F) {
  if (F.size() != 16 && F.size() != 17) throw std::invalid_argument("Lemma-7 model: #F must be 16 or 17");
  check_solids7(F);
  const auto nF = static_cast<std::int64_t>(F.size());

  const Grassmannian planes(7, 3);
  const auto vars = var7(F);
  std::vector<std::uint32_t> keys;
  for (const auto& u : vars) keys.push_back(planes.index_of(u));
  LinearModel m(std::move(keys), true);
  m.set_objective_constant(nF);

  const auto count_in = [&](const Subspace& w, bool contained_in_w) {
    std::int64_t c = 0;
    for (const auto& s : F) c += contained_in_w ? w.contains(s) : s.contains(w);
    return c;
  };

  std::map<std::vector<std::uint32_t>, std::size_t> omega_cache;
  for (std::size_t w : {1, 2, 4, 5, 6}) {
    const Grassmannian family(7, w);
    auto lists = incidence_lists(vars, family);
    for (std::size_t i = 0; i < lists.size(); ++i) {
      if (lists[i].empty()) continue;
      const auto& W = family[i];
      std::int64_t rhs = 0;
      switch (w) {
        case 1:
          rhs = nF - count_in(W, false);
          break;
        case 2:
          if (count_in(W, false) > 0) continue;
          rhs = 1;
          break;
        case 4:
          if (count_in(W, true) > 0) continue;
          rhs = 1;
          break;
        case 5: {
          if (count_in(W, true) > 0) continue;
          auto it = omega_cache.find(lists[i]);
          if (it == omega_cache.end()) {
            std::vector<Subspace> inside;
            for (auto p : lists[i]) inside.push_back(vars[p]);
            it = omega_cache.emplace(lists[i], omega_of_planes(inside)).first;
          }
          rhs = std::min<std::int64_t>(static_cast<std::int64_t>(it->second), 7);
          break;
        }
        case 6:
          rhs = 2 * (nF - count_in(W, true));
          break;
      }
      m.add_constraint(Constraint{row_name(w, i), std::move(lists[i]), {}, Sense::LessEqual, rhs});
    }
  }
  std::vector<std::uint32_t> all(m.num_vars());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = static_cast<std::uint32_t>(j);
  m.add_constraint(Constraint{"card", std::move(all), {}, Sense::GreaterEqual, 255 - nF});
  return m;
}

namespace {

std::uint32_t solid_position(const LinearModel& m, const Grassmannian& solids, const Subspace& S) {
  if (S.ambient() != 8 || S.dim() != 4) throw std::invalid_argument("cut: S must be a solid of F2^8");
  const auto pos = m.position_of_key(solids.index_of(S));
  if (!pos) throw std::invalid_argument("cut: S is not a variable of the model");
  return *pos;
}

}  // namespace

void add_fix_zero_cut(LinearModel& m, const Subspace& S) {
  const Grassmannian solids(8, 4);
  m.fix(solid_position(m, solids, S), 0);
}

void add_coverage_cut(LinearModel& m, const Subspace& S, std::int64_t rhs) {
  const Grassmannian solids(8, 4);
  const auto pos = solid_position(m, solids, S);
  Constraint c{"cover_" + std::to_string(m.key(pos)), {}, {}, Sense::GreaterEqual, rhs};
  for (std::size_t j = 0; j < m.num_vars(); ++j) {
    const auto meet = intersection_dim(solids[m.key(j)], S);
    if (meet == 0) continue;
    c.vars.push_back(static_cast<std::uint32_t>(j));
    c.coefs.push_back((std::int64_t{1} << meet) - 1);
  }
  m.add_constraint(std::move(c));
}

std::vector<char> characteristic_vector(const LinearModel& m, const Grassmannian& universe,
                                        std::span<const Subspace> words) {
  std::vector<char> x(m.num_vars(), 0);
  for (const auto& u : words) {
    const auto pos = m.position_of_key(universe.index_of(u));
    if (!pos) throw std::invalid_argument("characteristic_vector: word is not a variable");
    x[*pos] = 1;
  }
  return x;
}

}  // namespace cdc
