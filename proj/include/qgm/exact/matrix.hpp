#pragma once

#include <cstddef>
#include <vector>

#include "qgm/error.hpp"
#include "qgm/exact/scalar.hpp"

namespace qgm {

/// Dense row-major matrix over an exact (Cyc) or floating (Complex) field.
template <class S>
class Matrix {
 public:
  using Traits = ScalarTraits<S>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Traits::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Traits::one();
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw Error(Errc::ShapeMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix diagonal(const std::vector<S>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = Traits::conj((*this)(i, j));
    }
    return m;
  }
  /// Entrywise conjugate (no transpose).
  Matrix conjugate() const {
    Matrix m(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = Traits::conj(data_[k]);
    return m;
  }

  S trace() const {
    require_square("trace");
    S t = Traits::zero();
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& b) {
    require_same_shape(b);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& b) {
    require_same_shape(b);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const S& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::ShapeMismatch, "matrix product shapes do not match");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (Traits::trivially_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (Traits::trivially_zero(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  bool is_zero(double tol = kDefaultTolerance) const {
    for (const auto& x : data_) {
      if (!Traits::trivially_zero(x) && !Traits::is_zero(x, tol)) return false;
    }
    return true;
  }
  /// Entrywise equality: exact in Cyc mode, within `tol` in float mode.
  bool near(const Matrix& b, double tol = kDefaultTolerance) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!Traits::near(data_[k], b.data_[k], tol)) return false;
    }
    return true;
  }
  bool is_diagonal(double tol = kDefaultTolerance) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !Traits::trivially_zero((*this)(i, j)) && !Traits::is_zero((*this)(i, j), tol)) return false;
      }
    }
    return true;
  }
  double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) {
      if (!Traits::trivially_zero(x)) m = std::max(m, Traits::abs(x));
    }
    return m;
  }

  const std::vector<S>& data() const { return data_; }

 private:
  void require_square(const char* what) const {
    if (rows_ != cols_) throw Error(Errc::ShapeMismatch, std::string(what) + " needs a square matrix");
  }
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(Errc::ShapeMismatch, "matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using ExactMatrix = Matrix<Cyc>;
using FloatMatrix = Matrix<Complex>;

/// trace / dimension.
template <class S>
S ntrace(const Matrix<S>& m) {
  if (m.rows() == 0) throw Error(Errc::ShapeMismatch, "normalized trace of an empty matrix");
  return ScalarTraits<S>::from_rational(Rational(1, static_cast<long>(m.rows()))) * m.trace();
}

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ScalarTraits<S>::trivially_zero(a(i, j))) continue;
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
      }
    }
  }
  return k;
}

template <class S>
Matrix<S> power(const Matrix<S>& m, std::size_t e) {
  auto r = Matrix<S>::identity(m.rows());
  for (std::size_t i = 0; i < e; ++i) r = r * m;
  return r;
}

inline FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix f(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) f(i, j) = m(i, j).to_complex();
  }
  return f;
}

inline const FloatMatrix& to_float(const FloatMatrix& m) { return m; }

}  // namespace qgm
