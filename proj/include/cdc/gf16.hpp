#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "cdc/bit_matrix.hpp"

namespace cdc {

/// Element of F16 = F2[a]/(a^4 + a + 1). Bit i of the value is the
/// coefficient of a^i, so {1, a, a^2, a^3} is the coordinate basis.
class Gf16 {
 public:
  static constexpr std::uint8_t kModulus = 0b10011;  // a^4 + a + 1

  constexpr Gf16() = default;
  constexpr explicit Gf16(std::uint8_t value) : value_(value & 0xF) {}

  static constexpr Gf16 zero() { return Gf16(0); }
  static constexpr Gf16 one() { return Gf16(1); }
  /// Primitive element a.
  static constexpr Gf16 alpha() { return Gf16(2); }
  static Gf16 alpha_pow(int e);

  constexpr std::uint8_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr Gf16 operator+(Gf16 a, Gf16 b) { return Gf16(a.value_ ^ b.value_); }
  friend constexpr Gf16 operator*(Gf16 a, Gf16 b) {
    std::uint8_t acc = 0;
    std::uint8_t x = a.value_;
    for (std::uint8_t y = b.value_; y != 0; y >>= 1) {
      if (y & 1U) acc ^= x;
      x <<= 1;
      if (x & 0x10U) x ^= kModulus;
    }
    return Gf16(acc);
  }
  Gf16& operator+=(Gf16 o) { return *this = *this + o; }
  Gf16& operator*=(Gf16 o) { return *this = *this * o; }

  Gf16 pow(unsigned e) const;
  /// Throws std::domain_error on zero.
  Gf16 inverse() const;
  /// x -> x^2, the generator of Gal(F16/F2).
  Gf16 frobenius() const { return *this * *this; }
  /// Discrete log base a; throws std::domain_error on zero.
  int log() const;

  friend constexpr bool operator==(Gf16, Gf16) = default;
  friend constexpr auto operator<=>(Gf16, Gf16) = default;

 private:
  std::uint8_t value_ = 0;
};

inline Gf16 gf16_mul(Gf16 a, Gf16 b) { return a * b; }
inline Gf16 gf16_frobenius(Gf16 a) { return a.frobenius(); }

/// q-linearized polynomial sum_i c_i x^(2^i) over F16.
class QLinearizedPoly {
 public:
  QLinearizedPoly() = default;
  explicit QLinearizedPoly(std::vector<Gf16> coefficients) : coefficients_(std::move(coefficients)) {}

  const std::vector<Gf16>& coefficients() const { return coefficients_; }
  Gf16 operator()(Gf16 x) const;
  QLinearizedPoly operator+(const QLinearizedPoly& rhs) const;

 private:
  std::vector<Gf16> coefficients_;
};

/// 4x4 matrix of the F2-linear map in the basis {1, a, a^2, a^3}; row i holds
/// the coordinates of p(a^i), so x * M = p(x) for coordinate row vectors x.
BitMatrix matrix_of_qpoly(const QLinearizedPoly& p);

/// Matrix of multiplication by c in the same convention.
BitMatrix multiplication_matrix(Gf16 c);

}  // namespace cdc
