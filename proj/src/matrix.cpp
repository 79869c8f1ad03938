#include "entkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entkit/kernels.hpp"

namespace entkit {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("ComplexMatrix: empty shape");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("ComplexMatrix: empty shape");
  if (data_.size() != rows * cols)
    throw std::invalid_argument("ComplexMatrix: entry count does not match shape");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> u, std::span<const cplx> v) {
  ComplexMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        kernels::axpy(aij, b.row(k), m.row(i * b.rows() + k) + j * b.cols(), b.cols());
      }
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = std::conj(data_[k]);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  if (!square()) throw std::invalid_argument("trace: matrix not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  return std::sqrt(kernels::nrm2sq(data_.data(), data_.size()));
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_hermitian(double eps) const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > eps) return false;
    }
  }
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix add: shape mismatch");
  kernels::axpy(1.0, o.data_.data(), data_.data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sub: shape mismatch");
  kernels::axpy(-1.0, o.data_.data(), data_.data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  kernels::scal(s, data_.data(), data_.size());
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const cplx ail = a(i, l);
      if (ail != cplx{}) kernels::axpy(ail, b.row(l), c.row(i), b.cols());
    }
  }
  return c;
}

std::vector<cplx> ComplexMatrix::apply(std::span<const cplx> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  std::vector<cplx> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    // row * v as an unconjugated dot product: conj trick via dotc(conj(row)).
    cplx s = 0.0;
    const cplx* r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) s += r[j] * v[j];
    out[i] = s;
  }
  return out;
}

cplx vdot(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("vdot: length mismatch");
  return kernels::dotc(a.data(), b.data(), a.size());
}

double vnorm(std::span<const cplx> v) {
  return std::sqrt(kernels::nrm2sq(v.data(), v.size()));
}

void vnormalize(std::span<cplx> v) {
  const double n = vnorm(v);
  if (n == 0.0) throw std::invalid_argument("vnormalize: zero vector");
  kernels::scal(1.0 / n, v.data(), v.size());
}

}  // namespace entkit
