#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace plateau {

inline std::int64_t zero_like(std::int64_t) { return 0; }
inline std::int64_t conj(std::int64_t x) { return x; }

/// Row-major dense matrix over an exact scalar type. The scalar supplies
/// zero_like(x) and conj(x) as free functions.
template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const { return data_; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

template <class Scalar>
DenseMatrix<Scalar> operator*(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("DenseMatrix: shape mismatch in product");
  if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) return {};
  const Scalar zero = zero_like(a(0, 0));
  DenseMatrix<Scalar> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class Scalar>
DenseMatrix<Scalar> scaled(DenseMatrix<Scalar> m, std::int64_t k) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * k;
  return m;
}

/// Conjugate transpose.
template <class Scalar>
DenseMatrix<Scalar> adjoint(const DenseMatrix<Scalar>& m) {
  if (m.rows() == 0) return {};
  DenseMatrix<Scalar> out(m.cols(), m.rows(), zero_like(m(0, 0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
  return out;
}

template <class Scalar>
DenseMatrix<Scalar> transpose(const DenseMatrix<Scalar>& m) {
  if (m.rows() == 0) return {};
  DenseMatrix<Scalar> out(m.cols(), m.rows(), zero_like(m(0, 0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

/// Block (i, j) of the result is a(i, j) * b; rows ordered by a's index first.
template <class Scalar>
DenseMatrix<Scalar> kronecker(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() == 0 || b.rows() == 0) return {};
  DenseMatrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols(), zero_like(a(0, 0)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
  return out;
}

}  // namespace plateau
