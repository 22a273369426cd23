#include "cdc/grassmannian.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdc {
namespace {

using Row = Subspace::Row;

// Fill the free (non-pivot, right-of-pivot) positions of one echelon cell.
void emit_cell(std::size_t v, const std::vector<std::size_t>& pivots, std::vector<Subspace>& out) {
  const std::size_t k = pivots.size();
  Row pivot_mask = 0;
  for (auto p : pivots) pivot_mask |= Row{1} << p;

  std::vector<std::pair<std::size_t, std::size_t>> free_cells;  // (row, col)
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = pivots[i] + 1; j < v; ++j) {
      if (((pivot_mask >> j) & 1U) == 0) free_cells.emplace_back(i, j);
    }
  }
  const std::uint64_t combos = std::uint64_t{1} << free_cells.size();
  std::vector<Row> rows(k);
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    for (std::size_t i = 0; i < k; ++i) rows[i] = Row{1} << pivots[i];
    for (std::size_t b = 0; b < free_cells.size(); ++b) {
      if ((mask >> b) & 1U) rows[free_cells[b].first] |= Row{1} << free_cells[b].second;
    }
    out.push_back(Subspace::from_rref(v, rows));
  }
}

void for_each_pivot_set(std::size_t v, std::size_t k, std::size_t start, std::vector<std::size_t>& pivots,
                        std::vector<Subspace>& out) {
  if (pivots.size() == k) {
    emit_cell(v, pivots, out);
    return;
  }
  for (std::size_t c = start; c + (k - pivots.size()) <= v; ++c) {
    pivots.push_back(c);
    for_each_pivot_set(v, k, c + 1, pivots, out);
    pivots.pop_back();
  }
}

}  // namespace

std::vector<Subspace> enumerate_grassmannian(std::size_t v, std::size_t k) {
  if (k > v || v > 16) throw std::invalid_argument("enumerate_grassmannian: need 0 <= k <= v <= 16");
  std::vector<Subspace> out;
  std::vector<std::size_t> pivots;
  for_each_pivot_set(v, k, 0, pivots, out);
  std::sort(out.begin(), out.end());
  return out;
}

Grassmannian::Grassmannian(std::size_t v, std::size_t k) : v_(v), k_(k), elements_(enumerate_grassmannian(v, k)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
}

std::optional<std::uint32_t> Grassmannian::find(const Subspace& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Grassmannian::index_of(const Subspace& s) const {
  if (auto i = find(s)) return *i;
  throw std::out_of_range("Grassmannian::index_of: subspace of dim " + std::to_string(s.dim()) + " in F2^" +
                          std::to_string(s.ambient()) + " not in G(" + std::to_string(v_) + "," +
                          std::to_string(k_) + ")");
}

}  // namespace cdc
