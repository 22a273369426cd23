#include "cdc/rank_code.hpp"

#include <stdexcept>

#include "cdc/gf16.hpp"
#include "cdc/kernels.hpp"

namespace cdc {

std::size_t rank_distance(const BitMatrix& a, const BitMatrix& b) { return rank(a ^ b); }

void RankMetricCode::validate() const {
  for (const auto& w : words) {
    if (w.rows() != m || w.cols() != n) throw std::invalid_argument("RankMetricCode: word of wrong shape");
  }
  if (words.size() >= 2) {
    const auto profile = rank_distance_profile(*this);
    if (*profile.min < declared_min_rank_distance) {
      throw std::invalid_argument("RankMetricCode: minimum rank distance " + std::to_string(*profile.min) +
                                  " below declared " + std::to_string(declared_min_rank_distance));
    }
  }
}

RankDistanceProfile rank_distance_profile(const RankMetricCode& code) {
  const auto hist = kernels::pairwise_rank_distances(code.words);
  RankDistanceProfile out;
  out.histogram = hist.counts;
  out.min = hist.min;
  return out;
}

RankMetricCode gabidulin(std::size_t m, std::size_t n, std::size_t d) {
  if (m != 4 || n != 4) throw std::invalid_argument("gabidulin: only 4x4 codes over F16 are supported");
  if (d < 1 || d > n) throw std::invalid_argument("gabidulin: need 1 <= d <= n");
  const std::size_t terms = n - d + 1;
  RankMetricCode code{m, n, {}, d};
  std::size_t total = 1;
  for (std::size_t i = 0; i < terms; ++i) total *= 16;
  code.words.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<Gf16> coefficients(terms);
    std::size_t rest = idx;
    for (std::size_t i = 0; i < terms; ++i) {
      coefficients[i] = Gf16(static_cast<std::uint8_t>(rest % 16));
      rest /= 16;
    }
    code.words.push_back(matrix_of_qpoly(QLinearizedPoly(std::move(coefficients))));
  }
  return code;
}

RankMetricCode last_row_subcode(const RankMetricCode& code, BitMatrix::Row row) {
  RankMetricCode out{code.m, code.n, {}, code.declared_min_rank_distance};
  for (const auto& w : code.words) {
    if (w.row(code.m - 1) == row) out.words.push_back(w);
  }
  return out;
}

Subspace lift_matrix(const BitMatrix& a) {
  const std::size_t m = a.rows();
  std::vector<Subspace::Row> rows(m);
  for (std::size_t i = 0; i < m; ++i) rows[i] = (Subspace::Row{1} << i) | (a.row(i) << m);
  return Subspace::from_rref(m + a.cols(), std::move(rows));
}

}  // namespace cdc
