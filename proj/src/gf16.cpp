#include "cdc/gf16.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdc {

Gf16 Gf16::alpha_pow(int e) {
  e %= 15;
  if (e < 0) e += 15;
  return alpha().pow(static_cast<unsigned>(e));
}

Gf16 Gf16::pow(unsigned e) const {
  Gf16 result = one();
  Gf16 base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Gf16 Gf16::inverse() const {
  if (is_zero()) throw std::domain_error("Gf16::inverse of zero");
  return pow(14);
}

int Gf16::log() const {
  if (is_zero()) throw std::domain_error("Gf16::log of zero");
  Gf16 x = one();
  for (int e = 0; e < 15; ++e) {
    if (x == *this) return e;
    x *= alpha();
  }
  throw std::logic_error("Gf16::log: modulus is not primitive");
}

Gf16 QLinearizedPoly::operator()(Gf16 x) const {
  Gf16 acc;
  Gf16 power = x;  // x^(2^i)
  for (Gf16 c : coefficients_) {
    acc += c * power;
    power = power.frobenius();
  }
  return acc;
}

QLinearizedPoly QLinearizedPoly::operator+(const QLinearizedPoly& rhs) const {
  std::vector<Gf16> out(std::max(coefficients_.size(), rhs.coefficients_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coefficients_.size()) out[i] += coefficients_[i];
    if (i < rhs.coefficients_.size()) out[i] += rhs.coefficients_[i];
  }
  return QLinearizedPoly(std::move(out));
}

BitMatrix matrix_of_qpoly(const QLinearizedPoly& p) {
  std::vector<BitMatrix::Row> rows(4);
  for (int i = 0; i < 4; ++i) rows[i] = p(Gf16::alpha_pow(i)).value();
  return BitMatrix(4, std::move(rows));
}

BitMatrix multiplication_matrix(Gf16 c) {
  return matrix_of_qpoly(QLinearizedPoly({c}));
}

}  // namespace cdc
