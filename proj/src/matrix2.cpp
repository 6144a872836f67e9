#include "ptdimer/matrix2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ptdimer {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex Matrix2c::operator()(int row, int col) const {
  if (row == 1 && col == 1) return m11;
  if (row == 1 && col == 2) return m12;
  if (row == 2 && col == 1) return m21;
  if (row == 2 && col == 2) return m22;
  throw std::out_of_range("Matrix2c index out of range");
}

Matrix2c& Matrix2c::operator+=(const Matrix2c& other) {
  m11 += other.m11;
  m12 += other.m12;
  m21 += other.m21;
  m22 += other.m22;
  return *this;
}

Matrix2c& Matrix2c::operator-=(const Matrix2c& other) {
  m11 -= other.m11;
  m12 -= other.m12;
  m21 -= other.m21;
  m22 -= other.m22;
  return *this;
}

Matrix2c& Matrix2c::operator*=(Complex s) {
  m11 *= s;
  m12 *= s;
  m21 *= s;
  m22 *= s;
  return *this;
}

Matrix2c operator+(Matrix2c a, const Matrix2c& b) { return a += b; }
Matrix2c operator-(Matrix2c a, const Matrix2c& b) { return a -= b; }
Matrix2c operator*(Complex s, Matrix2c a) { return a *= s; }
Matrix2c operator*(Matrix2c a, Complex s) { return a *= s; }

Matrix2c operator*(const Matrix2c& a, const Matrix2c& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Matrix2c adjoint(const Matrix2c& m) {
  return {std::conj(m.m11), std::conj(m.m21), std::conj(m.m12), std::conj(m.m22)};
}

Matrix2c conj(const Matrix2c& m) {
  return {std::conj(m.m11), std::conj(m.m12), std::conj(m.m21), std::conj(m.m22)};
}

Matrix2c transpose(const Matrix2c& m) { return {m.m11, m.m21, m.m12, m.m22}; }

Complex det(const Matrix2c& m) { return m.m11 * m.m22 - m.m12 * m.m21; }

Complex trace(const Matrix2c& m) { return m.m11 + m.m22; }

double max_abs(const Matrix2c& m) {
  return std::max({std::abs(m.m11), std::abs(m.m12), std::abs(m.m21), std::abs(m.m22)});
}

bool is_finite(const Matrix2c& m) {
  return is_finite(m.m11) && is_finite(m.m12) && is_finite(m.m21) && is_finite(m.m22);
}

}  // namespace ptdimer
