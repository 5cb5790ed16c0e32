#pragma once

#include <cstddef>
#include <vector>

#include "falt/real.hpp"

namespace falt {

struct Complex {
  Real re{64};
  Real im{64};

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(Precision bits) : re(bits), im(bits) {}

  /// cos(theta) + i sin(theta).
  static Complex polar(const Real& modulus, const Real& theta);

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }
  Real abs() const { return sqrt(norm()); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& s);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  Complex operator-() const { return {-re, -im}; }
};

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols, Precision bits);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  /// Conjugate transpose.
  ComplexMatrix adjoint() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  ComplexMatrix& operator*=(const Complex& s);

  /// Largest entry modulus.
  Real max_abs() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Precision bits_;
  std::vector<Complex> data_;
};

struct LogDeterminant {
  Real log_abs;   // log |det|
  Complex phase;  // det / |det|
};

/// LU with partial pivoting. Throws std::runtime_error if a pivot vanishes.
LogDeterminant log_determinant(ComplexMatrix m);

/// Leading principal minors det(M[0..k, 0..k]) for k = 1..rows.
std::vector<Complex> leading_minors(const ComplexMatrix& m);

}  // namespace falt
