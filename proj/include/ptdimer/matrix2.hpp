#pragma once

#include <complex>

namespace ptdimer {

using Complex = std::complex<double>;

bool is_finite(Complex z);

/// Dense complex 2x2 matrix, row-major entries.
struct Matrix2c {
  Complex m11{};
  Complex m12{};
  Complex m21{};
  Complex m22{};

  static Matrix2c identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Matrix2c diagonal(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }

  /// 1-based element access, matching the U_ij notation used throughout.
  Complex operator()(int row, int col) const;

  Matrix2c& operator+=(const Matrix2c& other);
  Matrix2c& operator-=(const Matrix2c& other);
  Matrix2c& operator*=(Complex s);

  bool operator==(const Matrix2c&) const = default;
};

Matrix2c operator+(Matrix2c a, const Matrix2c& b);
Matrix2c operator-(Matrix2c a, const Matrix2c& b);
Matrix2c operator*(const Matrix2c& a, const Matrix2c& b);
Matrix2c operator*(Complex s, Matrix2c a);
Matrix2c operator*(Matrix2c a, Complex s);

Matrix2c adjoint(const Matrix2c& m);
Matrix2c conj(const Matrix2c& m);
Matrix2c transpose(const Matrix2c& m);
Complex det(const Matrix2c& m);
Complex trace(const Matrix2c& m);

/// Largest entry modulus.
double max_abs(const Matrix2c& m);
bool is_finite(const Matrix2c& m);

}  // namespace ptdimer
