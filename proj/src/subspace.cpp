#include "cdc/subspace.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <stdexcept>

namespace cdc {
namespace {

void require_same_ambient(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) {
    throw AmbientMismatch("subspaces live in F2^" + std::to_string(u.ambient()) + " and F2^" +
                          std::to_string(w.ambient()));
  }
}

std::vector<Subspace::Row> rref_rows(std::size_t ambient, std::vector<Subspace::Row> rows) {
  const BitMatrix reduced = rref(BitMatrix(ambient, std::move(rows))).matrix;
  return {reduced.row_words().begin(), reduced.row_words().end()};
}

}  // namespace

Subspace::Subspace(std::size_t ambient, std::span<const Row> generators) : ambient_(ambient) {
  if (ambient > BitMatrix::kMaxCols) throw std::invalid_argument("Subspace: ambient dimension above 64");
  rows_ = rref_rows(ambient, {generators.begin(), generators.end()});
}

Subspace::Subspace(const BitMatrix& generators) : Subspace(generators.cols(), generators.row_words()) {}

Subspace Subspace::from_rref(std::size_t ambient, std::vector<Row> rows) {
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::full(std::size_t ambient) { return span_of_units(ambient, 1, ambient); }

Subspace Subspace::span_of_units(std::size_t ambient, std::size_t first, std::size_t last) {
  if (first < 1 || last > ambient) throw std::invalid_argument("span_of_units: index out of range");
  std::vector<Row> rows;
  for (std::size_t i = first; i <= last; ++i) rows.push_back(Row{1} << (i - 1));
  return from_rref(ambient, std::move(rows));
}

bool Subspace::contains_vector(Row x) const {
  // Reduce against the RREF rows using their pivots.
  for (Row r : rows_) {
    if ((x >> std::countr_zero(r)) & 1U) x ^= r;
  }
  return x == 0;
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  if (other.dim() > dim()) return false;
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](Row r) { return contains_vector(r); });
}

std::vector<Subspace::Row> Subspace::nonzero_vectors() const {
  const std::size_t k = rows_.size();
  std::vector<Row> out;
  out.reserve((std::size_t{1} << k) - 1);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Row x = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) x ^= rows_[static_cast<std::size_t>(std::countr_zero(m))];
    out.push_back(x);
  }
  return out;
}

std::string Subspace::to_hex() const {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(rows_[i]));
    if (i != 0) out += ',';
    out += buf;
  }
  return out;
}

std::size_t span_rank(std::span<const Subspace::Row> a, std::span<const Subspace::Row> b) {
  std::array<Subspace::Row, 128> buf;
  if (a.size() + b.size() > buf.size()) throw std::invalid_argument("span_rank: too many generators");
  std::copy(a.begin(), a.end(), buf.begin());
  std::copy(b.begin(), b.end(), buf.begin() + static_cast<std::ptrdiff_t>(a.size()));
  return rank_of(std::span<const Subspace::Row>(buf.data(), a.size() + b.size()));
}

Subspace sum(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  std::vector<Subspace::Row> rows(u.rows().begin(), u.rows().end());
  rows.insert(rows.end(), w.rows().begin(), w.rows().end());
  return Subspace(u.ambient(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  // (U n W)^perp = U^perp + W^perp
  return dual(sum(dual(u), dual(w)));
}

std::size_t intersection_dim(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  return u.dim() + w.dim() - span_rank(u.rows(), w.rows());
}

std::size_t subspace_distance(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  // dim U + dim W - 2 dim(U n W) = 2 dim(U + W) - dim U - dim W
  return 2 * span_rank(u.rows(), w.rows()) - u.dim() - w.dim();
}

Subspace dual(const Subspace& u) {
  const BitMatrix k = kernel(BitMatrix(u.ambient(), {u.rows().begin(), u.rows().end()}));
  return Subspace::from_rref(u.ambient(), {k.row_words().begin(), k.row_words().end()});
}

Subspace transform(const Subspace& u, const BitMatrix& g) {
  if (g.rows() != u.ambient() || g.cols() != u.ambient()) {
    throw std::invalid_argument("transform: matrix does not match the ambient dimension");
  }
  std::vector<Subspace::Row> rows;
  rows.reserve(u.dim());
  for (auto r : u.rows()) rows.push_back(cdc::apply(r, g.row_words()));
  return Subspace(u.ambient(), rows);
}

std::vector<Subspace> incident_set(std::span<const Subspace> collection, const Subspace& pivot) {
  std::vector<Subspace> out;
  for (const auto& u : collection) {
    if (incident(u, pivot)) out.push_back(u);
  }
  return out;
}

Subspace special_point() { return Subspace::span_of_units(8, 8, 8); }

Subspace special_hyperplane() { return Subspace::span_of_units(8, 1, 7); }

Subspace embed_iota(const Subspace& u) {
  if (u.ambient() != 7) throw std::invalid_argument("embed_iota: expected a subspace of F2^7");
  return Subspace::from_rref(8, {u.rows().begin(), u.rows().end()});
}

Subspace restrict_iota(const Subspace& u) {
  if (u.ambient() != 8) throw std::invalid_argument("restrict_iota: expected a subspace of F2^8");
  if (!special_hyperplane().contains(u)) throw std::invalid_argument("restrict_iota: not inside x_8 = 0");
  return Subspace::from_rref(7, {u.rows().begin(), u.rows().end()});
}

BitMatrix normalize_point(const Subspace& p) {
  if (p.ambient() != 8 || p.dim() != 1) throw std::invalid_argument("normalize_point: expected a point of F2^8");
  const Subspace::Row x = p.rows()[0];
  if (((x >> 7) & 1U) == 0) throw std::invalid_argument("normalize_point: point lies in the special hyperplane");
  // (I7 0; q 1) is an involution over F2, so it is its own inverse.
  BitMatrix g = BitMatrix::identity(8);
  std::vector<BitMatrix::Row> rows(g.row_words().begin(), g.row_words().end());
  rows[7] = x;
  return BitMatrix(8, std::move(rows));
}

}  // namespace cdc
