#include "falt/complex_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace falt {

Complex Complex::polar(const Real& modulus, const Real& theta) {
  return {modulus * cos(theta), modulus * sin(theta)};
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real d = o.norm();
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator*=(const Real& s) {
  re *= s;
  im *= s;
  return *this;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, Precision bits)
    : rows_(rows), cols_(cols), bits_(bits), data_(rows * cols, Complex(bits)) {}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_, bits_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix t(*this);
  for (auto& z : t.data_) z.im = -z.im;
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const { return transpose().conj(); }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ComplexMatrix: shape mismatch in product");
  ComplexMatrix out(a.rows_, b.cols_, std::max(a.bits_, b.bits_));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Complex acc(out.bits_);
      for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("ComplexMatrix: shape mismatch");
  ComplexMatrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

ComplexMatrix& ComplexMatrix::operator*=(const Complex& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Real ComplexMatrix::max_abs() const {
  Real m(bits_);
  for (const auto& z : data_) m = max(m, z.abs());
  return m;
}

LogDeterminant log_determinant(ComplexMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("log_determinant: matrix not square");
  const std::size_t n = m.rows();
  const Precision bits = m.max_abs().precision();
  Real log_abs(bits);
  Complex phase(Real(1, bits), Real(bits));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    Real best = m(k, k).norm();
    for (std::size_t r = k + 1; r < n; ++r) {
      Real v = m(r, k).norm();
      if (v > best) {
        best = std::move(v);
        piv = r;
      }
    }
    if (best.is_zero()) throw std::runtime_error("log_determinant: singular matrix");
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(piv, c));
      phase = -phase;
    }
    const Complex pivot = m(k, k);
    const Real mod = pivot.abs();
    log_abs += log(mod);
    phase *= Complex(pivot.re / mod, pivot.im / mod);
    for (std::size_t r = k + 1; r < n; ++r) {
      Complex f = m(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return {log_abs, phase};
}

std::vector<Complex> leading_minors(const ComplexMatrix& m) {
  std::vector<Complex> out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    ComplexMatrix sub(k, k, m.max_abs().precision());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    LogDeterminant d = log_determinant(sub);
    out.push_back(d.phase * exp(d.log_abs));
  }
  return out;
}

}  // namespace falt
