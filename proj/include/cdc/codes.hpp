#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "cdc/bit_matrix.hpp"
#include "cdc/rank_code.hpp"
#include "cdc/subspace.hpp"

namespace cdc {

/// A set of k-subspaces of F2^v with a declared minimum distance d. The
/// declared distance is not checked on construction (see verify_cdc);
/// duplicates are kept so that tampered inputs can be reported.
class ConstantDimensionCode {
 public:
  ConstantDimensionCode() = default;
  /// Throws AmbientMismatch on a word from another ambient space and
  /// std::invalid_argument on a word of the wrong dimension.
  ConstantDimensionCode(std::size_t v, std::size_t k, std::size_t d, std::vector<Subspace> words);

  std::size_t v() const { return v_; }
  std::size_t k() const { return k_; }
  std::size_t d() const { return d_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Subspace>& words() const { return words_; }

  bool contains(const Subspace& u) const;

 private:
  std::size_t v_ = 0;
  std::size_t k_ = 0;
  std::size_t d_ = 0;
  std::vector<Subspace> words_;
};

/// Lifts every word of a rank-metric code; the distance doubles.
ConstantDimensionCode lift(const RankMetricCode& rc);

/// Lifted Gabidulin (8, 256, 6; 4) code. Word i is the lift of gabidulin().words[i].
ConstantDimensionCode lifted_gabidulin();

/// The special solid S = <e5, ..., e8>.
Subspace special_solid();

enum class ExtendedVariant { A, B };

/// Lifted Gabidulin plus one extra word: S for variant A, <e4, ..., e7> for
/// variant B. The extra word is last.
ConstantDimensionCode extended_lmrd(ExtendedVariant variant);
Subspace extended_lmrd_extra_word(ExtendedVariant variant);

/// Element-wise dual; (v, N, d; k) becomes (v, N, d; v - k).
ConstantDimensionCode orthogonal_code(const ConstantDimensionCode& c);

/// Incidence counts against every point and hyperplane. by_point[x - 1] is
/// #I(C; <x>); by_hyperplane[h - 1] is #I(C; h^perp) for the normal vector h.
struct DegreeProfile {
  std::size_t v = 0;
  std::vector<std::uint32_t> by_point;
  std::vector<std::uint32_t> by_hyperplane;
};

DegreeProfile degree_profile(std::span<const Subspace> words, std::size_t v);
inline DegreeProfile degree_profile(const ConstantDimensionCode& c) { return degree_profile(c.words(), c.v()); }

/// Point off a hyperplane with the largest degree.
struct HyperplaneWitness {
  BitMatrix::Row normal = 0;
  BitMatrix::Row point = 0;
  std::uint32_t degree = 0;
};

struct CdcReport {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t size = 0;
  std::size_t declared_distance = 0;

  std::optional<std::size_t> min_distance;  // unset when size < 2
  std::map<std::size_t, std::uint64_t> distance_histogram;
  bool distance_ok = false;

  std::uint32_t max_point_degree = 0;
  std::uint32_t max_hyperplane_degree = 0;
  std::optional<std::uint64_t> point_cap;
  std::optional<std::uint64_t> hyperplane_cap;
  bool caps_ok = true;

  /// Run for (8, N, >= 6; 4) codes with N >= 255: one witness per
  /// hyperplane, ok when each has degree >= 14.
  bool hyperplane_audit_run = false;
  bool hyperplane_audit_ok = true;
  std::vector<HyperplaneWitness> hyperplane_witnesses;

  bool too_small() const { return size < 2; }
  bool ok() const { return distance_ok && caps_ok && hyperplane_audit_ok; }
};

CdcReport verify_cdc(const ConstantDimensionCode& c);

/// Distances from `word` to every element of `code`, as a histogram.
std::map<std::size_t, std::uint64_t> distance_profile_to(const Subspace& word, std::span<const Subspace> code);

/// Generators of the automorphism group of the lifted Gabidulin code, as
/// 8 x 8 matrices acting on row vectors (x | y), x, y in F16:
/// (x, y) -> (x^2, y^2), (x, y) -> (a x, y), (x, y) -> (x, a y), and the
/// translations (x, y) -> (x, y + g(x)) for g in an F2-basis of the code.
std::vector<BitMatrix> lmrd_automorphism_generators();

/// Code file: `q=2 v=<v> k=<k>` then one word per line, comma-separated hex
/// RREF rows. Blank lines and lines starting with '#' are skipped.
void write_code(std::ostream& out, const ConstantDimensionCode& c);
/// Throws std::runtime_error naming the offending line.
ConstantDimensionCode read_code(std::istream& in, std::size_t declared_distance);

}  // namespace cdc
