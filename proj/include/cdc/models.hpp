#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cdc/grassmannian.hpp"
#include "cdc/linear_model.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

/// For every W in `family` (canonical order), the ascending positions in
/// `vars` of the elements incident with W (contained in W, or containing W).
/// vars and family must share the ambient space.
std::vector<std::vector<std::uint32_t>> incidence_lists(std::span<const Subspace> vars, const Grassmannian& family);

/// Packing model for a (v, N, d; k) code containing F, with at most f
/// codewords through each point and inside each hyperplane. Variables are
/// all k-spaces, keyed by canonical index. Rows, grouped by the dimension w
/// of W and named w<w>_<index of W>:
///   w in {1, v-1}: sum over I(Var; W) <= f,
///   w in {t, 2k-t} with t = k - d/2 + 1: sum over I(Var; W) <= 1,
/// taking the smaller right-hand side when the two lists share a w.
/// F is added as fixings x_U = 1. Throws std::invalid_argument if two
/// members of F are closer than d.
LinearModel build_packing_model(std::size_t v, std::size_t k, std::size_t d, std::span<const Subspace> F,
                                std::int64_t f, bool relax);

/// The (8, N, 6; 4) instance: 200787 variables, rows for points,
/// lines, 6-spaces and hyperplanes.
LinearModel build_lemma6_model(std::span<const Subspace> F, std::int64_t f, bool relax);

/// Planes of F2^7 meeting every member of F in at most a point, canonical order.
std::vector<Subspace> var7(std::span<const Subspace> F);

/// Largest set of planes from var7(F) inside W pairwise meeting in at most a
/// point. Throws std::invalid_argument unless W is a 5-space of F2^7
/// containing no member of F.
std::size_t omega(std::span<const Subspace> F, const Subspace& W);

/// Model over the planes var7(F) for F a set of 16 or 17 solids of F2^7
/// pairwise meeting in at most a point. Objective sum x_U + #F. Families:
///   w1: points P, <= #F - #I(F; P)
///   w2: lines in no member of F, <= 1
///   w4: solids outside F, <= 1
///   w5: 5-spaces containing no member of F, <= min(omega(F, W), 7)
///   w6: 6-spaces, <= 2 (#F - #I(F; W))
///   card: sum x_U >= 255 - #F
/// Rows whose left-hand side is empty are omitted.
LinearModel build_lemma7_model(std::span<const Subspace> F);

/// x_S = 0 for the solid S. Throws std::invalid_argument if S is not a
/// variable of m (m must be keyed by canonical solid index of F2^8).
void add_fix_zero_cut(LinearModel& m, const Subspace& S);

/// sum over points P of S of sum over I(Var; P) of x_U >= rhs; the
/// coefficient of x_U is the number of points shared by S and U.
void add_coverage_cut(LinearModel& m, const Subspace& S, std::int64_t rhs);

/// Characteristic vector of `words` over the variables of m, where variable
/// keys index `universe`. Throws if a word is not a variable.
std::vector<char> characteristic_vector(const LinearModel& m, const Grassmannian& universe,
                                        std::span<const Subspace> words);

}  // namespace cdc
