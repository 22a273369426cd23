#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cdc/bit_matrix.hpp"
#include "cdc/clique.hpp"
#include "cdc/graph.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

/// perm[x] is the image of x.
using Permutation = std::vector<std::uint32_t>;

/// A group given by generating permutations of {0, ..., n-1}.
class GroupAction {
 public:
  GroupAction() = default;
  /// Throws std::invalid_argument if a generator is not a permutation of n points.
  GroupAction(std::size_t n, std::vector<Permutation> generators);

  static GroupAction trivial(std::size_t n) { return GroupAction(n, {}); }
  /// Action induced by x -> x * g on `domain`. Throws std::invalid_argument
  /// if some generator does not map the domain onto itself.
  static GroupAction from_matrices(std::span<const Subspace> domain, std::span<const BitMatrix> generators);

  std::size_t degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// True iff every generator is an automorphism of g.
  bool preserves(const SearchGraph& g) const;

 private:
  std::size_t n_ = 0;
  std::vector<Permutation> generators_;
};

/// Orbit representatives t_1, ..., t_m, with orbit sizes weakly decreasing
/// (ties by smallest element). Each representative is the smallest element
/// of its orbit. orbit_of[x] is the 0-based position of x's orbit.
struct Transversal {
  std::vector<std::uint32_t> representatives;
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::uint32_t> orbit_of;
};

Transversal orbits(const GroupAction& action);

/// One Lemma-5 branch: cliques of `graph` of size `target`, together with
/// `forced`, are the cliques of the parent that contain `forced` and
/// otherwise use only the listed vertices.
struct Subproblem {
  std::vector<std::uint32_t> forced;    // original vertex labels
  std::vector<std::uint32_t> vertices;  // original labels of graph's vertices, ascending
  SearchGraph graph;
  std::size_t target = 0;
};

/// Subproblem i forces t_i and keeps the neighbours x of t_i with
/// orbit_of[x] >= i; target drops by one. Requires target >= 1.
std::vector<Subproblem> split_subproblems(const SearchGraph& g, const Transversal& t, std::size_t target);

/// Splits p further with the trivial group (one branch per vertex).
std::vector<Subproblem> split_trivially(const Subproblem& p);

struct SplitOptions {
  /// Subproblems with at least thresholds[r] vertices are split again with
  /// the trivial group in round r.
  std::vector<std::size_t> thresholds;
  /// Worker count; 0 keeps the OpenMP default.
  int workers = 0;
  /// Return the full orbit closure, not only canonical representatives.
  bool expand_orbits = true;
  CliqueOptions clique;
};

struct SplitResult {
  /// Lexicographically smallest member of each clique orbit, sorted.
  std::vector<Clique> representatives;
  /// Every clique of the requested size (empty unless expand_orbits).
  std::vector<Clique> cliques;
  std::size_t subproblems = 0;
};

/// All cliques of size `target` of g via symmetry splitting. `action` must
/// consist of automorphisms of g. The result does not depend on the worker count.
SplitResult split_enumerate(const SearchGraph& g, const GroupAction& action, std::size_t target,
                            const SplitOptions& options = {});

/// Orbit of a vertex set under the group, each member sorted, the list sorted.
std::vector<Clique> clique_orbit(const GroupAction& action, const Clique& c);
/// Smallest member of clique_orbit(action, c).
Clique canonical_clique(const GroupAction& action, const Clique& c);

/// Order of the group generated by invertible n x n matrices, n <= 8.
std::uint64_t matrix_group_order(std::span<const BitMatrix> generators);

/// Permutations file: one generator per line, n space-separated 0-based
/// images. Blank lines and '#' comments are skipped.
std::vector<Permutation> read_permutations(std::istream& in);
void write_permutations(std::ostream& out, std::span<const Permutation> perms);

}  // namespace cdc
