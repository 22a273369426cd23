#include "cdc/codes.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cdc/bounds.hpp"
#include "cdc/gf16.hpp"
#include "cdc/kernels.hpp"

namespace cdc {

ConstantDimensionCode::ConstantDimensionCode(std::size_t v, std::size_t k, std::size_t d, std::vector<Subspace> words)
    : v_(v), k_(k), d_(d), words_(std::move(words)) {
  if (k > v) throw std::invalid_argument("ConstantDimensionCode: k exceeds v");
  for (const auto& w : words_) {
    if (w.ambient() != v) throw AmbientMismatch("ConstantDimensionCode: word outside F2^" + std::to_string(v));
    if (w.dim() != k) {
      throw std::invalid_argument("ConstantDimensionCode: word of dimension " + std::to_string(w.dim()) +
                                  ", expected " + std::to_string(k));
    }
  }
}

bool ConstantDimensionCode::contains(const Subspace& u) const {
  return std::find(words_.begin(), words_.end(), u) != words_.end();
}

ConstantDimensionCode lift(const RankMetricCode& rc) {
  std::vector<Subspace> words;
  words.reserve(rc.words.size());
  for (const auto& a : rc.words) words.push_back(lift_matrix(a));
  return ConstantDimensionCode(rc.m + rc.n, rc.m, 2 * rc.declared_min_rank_distance, std::move(words));
}

ConstantDimensionCode lifted_gabidulin() { return lift(gabidulin(4, 4, 3)); }

Subspace special_solid() { return Subspace::span_of_units(8, 5, 8); }

Subspace extended_lmrd_extra_word(ExtendedVariant variant) {
  return variant == ExtendedVariant::A ? special_solid() : Subspace::span_of_units(8, 4, 7);
}

ConstantDimensionCode extended_lmrd(ExtendedVariant variant) {
  auto words = lifted_gabidulin().words();
  words.push_back(extended_lmrd_extra_word(variant));
  return ConstantDimensionCode(8, 4, 6, std::move(words));
}

ConstantDimensionCode orthogonal_code(const ConstantDimensionCode& c) {
  std::vector<Subspace> words;
  words.reserve(c.size());
  for (const auto& w : c.words()) words.push_back(dual(w));
  return ConstantDimensionCode(c.v(), c.v() - c.k(), c.d(), std::move(words));
}

DegreeProfile degree_profile(std::span<const Subspace> words, std::size_t v) {
  auto counts = kernels::incidence_counts(words, v);
  return DegreeProfile{v, std::move(counts.by_point), std::move(counts.by_normal)};
}

std::map<std::size_t, std::uint64_t> distance_profile_to(const Subspace& word, std::span<const Subspace> code) {
  std::map<std::size_t, std::uint64_t> out;
  for (const auto& w : code) ++out[subspace_distance(word, w)];
  return out;
}

CdcReport verify_cdc(const ConstantDimensionCode& c) {
  CdcReport r;
  r.v = c.v();
  r.k = c.k();
  r.size = c.size();
  r.declared_distance = c.d();

  const auto hist = kernels::pairwise_distances(c.words());
  r.min_distance = hist.min;
  r.distance_histogram = hist.counts;
  r.distance_ok = !r.min_distance || *r.min_distance >= c.d();

  const auto profile = degree_profile(c);
  if (!profile.by_point.empty()) {
    r.max_point_degree = *std::max_element(profile.by_point.begin(), profile.by_point.end());
    r.max_hyperplane_degree = *std::max_element(profile.by_hyperplane.begin(), profile.by_hyperplane.end());
  }

  const BoundQuery query{2, c.v(), c.d(), c.k()};
  if (query.valid()) {
    const auto table = KnownValueTable::standard();
    r.point_cap = incidence_cap(query, 1, table);
    r.hyperplane_cap = incidence_cap(query, c.v() - 1, table);
    r.caps_ok = r.max_point_degree <= *r.point_cap && r.max_hyperplane_degree <= *r.hyperplane_cap;
  }

  if (c.v() == 8 && c.k() == 4 && c.d() >= 6 && c.size() >= 255) {
    r.hyperplane_audit_run = true;
    for (BitMatrix::Row h = 1; h < 256; ++h) {
      HyperplaneWitness w{h, 0, 0};
      for (BitMatrix::Row p = 1; p < 256; ++p) {
        if (dot(p, h) && (w.point == 0 || profile.by_point[p - 1] > w.degree)) {
          w.point = p;
          w.degree = profile.by_point[p - 1];
        }
      }
      if (w.degree < 14) r.hyperplane_audit_ok = false;
      r.hyperplane_witnesses.push_back(w);
    }
  }
  return r;
}

std::vector<BitMatrix> lmrd_automorphism_generators() {
  const auto block = [](const BitMatrix& a, const BitMatrix& b, const BitMatrix& c, const BitMatrix& d) {
    std::vector<BitMatrix::Row> rows(8);
    for (std::size_t i = 0; i < 4; ++i) {
      rows[i] = a.row(i) | (b.row(i) << 4);
      rows[i + 4] = c.row(i) | (d.row(i) << 4);
    }
    return BitMatrix(8, std::move(rows));
  };
  const auto id = BitMatrix::identity(4);
  const auto zero = BitMatrix::zero(4, 4);
  const auto frob = matrix_of_qpoly(QLinearizedPoly({Gf16::zero(), Gf16::one()}));
  const auto mul_alpha = multiplication_matrix(Gf16::alpha());

  std::vector<BitMatrix> gens;
  gens.push_back(block(frob, zero, zero, frob));
  gens.push_back(block(mul_alpha, zero, zero, id));
  gens.push_back(block(id, zero, zero, mul_alpha));
  for (int term = 0; term < 2; ++term) {
    for (std::uint8_t b = 1; b <= 8; b <<= 1) {
      std::vector<Gf16> coefficients(2, Gf16::zero());
      coefficients[term] = Gf16(b);
      gens.push_back(block(id, matrix_of_qpoly(QLinearizedPoly(coefficients)), zero, id));
    }
  }
  return gens;
}

void write_code(std::ostream& out, const ConstantDimensionCode& c) {
  out << "q=2 v=" << c.v() << " k=" << c.k() << '\n';
  for (const auto& w : c.words()) out << w.to_hex() << '\n';
}

namespace {

std::runtime_error parse_error(std::size_t line, const std::string& what) {
  return std::runtime_error("code file line " + std::to_string(line) + ": " + what);
}

std::size_t header_field(std::istringstream& in, const std::string& key, std::size_t line) {
  std::string token;
  if (!(in >> token) || token.rfind(key + "=", 0) != 0) throw parse_error(line, "expected " + key + "=<value>");
  std::size_t value = 0;
  const auto* first = token.data() + key.size() + 1;
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) throw parse_error(line, "bad value in '" + token + "'");
  return value;
}

}  // namespace

ConstantDimensionCode read_code(std::istream& in, std::size_t declared_distance) {
  std::string text;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t v = 0;
  std::size_t k = 0;
  std::vector<Subspace> words;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty() || text[0] == '#') continue;
    if (!have_header) {
      std::istringstream header(text);
      if (header_field(header, "q", line_no) != 2) throw parse_error(line_no, "only q=2 is supported");
      v = header_field(header, "v", line_no);
      k = header_field(header, "k", line_no);
      std::string extra;
      if (header >> extra) throw parse_error(line_no, "trailing text in header");
      if (v == 0 || v > BitMatrix::kMaxCols || k > v) throw parse_error(line_no, "unsupported v/k");
      have_header = true;
      continue;
    }
    std::vector<Subspace::Row> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = std::min(text.find(',', pos), text.size());
      const auto* first = text.data() + pos;
      const auto* last = text.data() + comma;
      std::uint64_t row = 0;
      auto [ptr, ec] = std::from_chars(first, last, row, 16);
      if (ec != std::errc() || ptr != last || first == last) throw parse_error(line_no, "bad hex row");
      if (v < 64 && (row >> v) != 0) throw parse_error(line_no, "row has bits beyond v");
      rows.push_back(row);
      pos = comma + 1;
    }
    Subspace u(v, rows);
    if (u.dim() != k || rows.size() != k) {
      throw parse_error(line_no, "word has rank " + std::to_string(u.dim()) + ", expected " + std::to_string(k));
    }
    words.push_back(std::move(u));
  }
  if (!have_header) throw parse_error(line_no, "missing header");
  return ConstantDimensionCode(v, k, declared_distance, std::move(words));
}

}  // namespace cdc
