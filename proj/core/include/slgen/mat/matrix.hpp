#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "slgen/error.hpp"
#include "slgen/ring.hpp"

namespace slgen {

/// Dense row-major matrix over a runtime coefficient ring. Values are
/// immutable once built; every operation returns a fresh matrix.
template <Ring R>
class Matrix {
 public:
  using value_type = typename R::value_type;

  Matrix(std::shared_ptr<const R> ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_->zero()) {}
  Matrix(std::shared_ptr<const R> ring, std::size_t rows, std::size_t cols, std::vector<value_type> data)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw PreconditionError("matrix data size does not match its shape");
  }

  template <class Fn>
  static Matrix generate(std::shared_ptr<const R> ring, std::size_t rows, std::size_t cols, Fn&& fn) {
    std::vector<value_type> d;
    d.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) d.push_back(fn(i, j));
    return Matrix(std::move(ring), rows, cols, std::move(d));
  }
  static Matrix zero(std::shared_ptr<const R> ring, std::size_t n) { return Matrix(std::move(ring), n, n); }
  static Matrix identity(std::shared_ptr<const R> ring, std::size_t n) {
    const auto one = ring->one();
    return scalar(std::move(ring), n, one);
  }
  static Matrix scalar(std::shared_ptr<const R> ring, std::size_t n, const value_type& s) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = s;
    return m;
  }

  const R& ring() const { return *ring_; }
  const std::shared_ptr<const R>& ring_ptr() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length of a square matrix.
  std::size_t size() const {
    if (!is_square()) throw PreconditionError("matrix is not square");
    return rows_;
  }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Row-major entries; for n x n matrices this is the flattened coordinate vector.
  const std::vector<value_type>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!ring_->is_zero(v)) return false;
    return true;
  }

  /// The scalar s if this equals s*I.
  std::optional<value_type> scalar_value() const {
    if (!is_square()) return std::nullopt;
    if (rows_ == 0) return ring_->zero();
    const value_type s = data_[0];
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const auto& v = data_[i * cols_ + j];
        if (i == j ? !ring_->equal(v, s) : !ring_->is_zero(v)) return std::nullopt;
      }
    return s;
  }
  bool is_scalar() const { return scalar_value().has_value(); }

  value_type trace() const {
    value_type t = ring_->zero();
    for (std::size_t i = 0; i < size(); ++i) t = ring_->add(t, (*this)(i, i));
    return t;
  }

  Matrix transpose() const {
    return generate(ring_, cols_, rows_, [&](std::size_t i, std::size_t j) { return (*this)(j, i); });
  }

  Matrix scaled(const value_type& s) const {
    std::vector<value_type> d(data_.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = ring_->mul(s, data_[k]);
    return Matrix(ring_, rows_, cols_, std::move(d));
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    std::vector<value_type> d(a.data_.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.ring_->add(a.data_[k], b.data_[k]);
    return Matrix(a.ring_, a.rows_, a.cols_, std::move(d));
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    std::vector<value_type> d(a.data_.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.ring_->sub(a.data_[k], b.data_[k]);
    return Matrix(a.ring_, a.rows_, a.cols_, std::move(d));
  }
  Matrix operator-() const { return scaled(ring_->neg(ring_->one())); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_owner(a.ring_.get(), b.ring_.get(), "matrix product");
    if (a.cols_ != b.rows_) throw MismatchError("matrix product: inner dimensions differ");
    const auto& r = *a.ring_;
    std::vector<value_type> d(a.rows_ * b.cols_, r.zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& aik = a.data_[i * a.cols_ + k];
        if (r.is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          d[i * b.cols_ + j] = r.add(d[i * b.cols_ + j], r.mul(aik, b.data_[k * b.cols_ + j]));
      }
    return Matrix(a.ring_, a.rows_, b.cols_, std::move(d));
  }

  /// Matrix times column vector.
  std::vector<value_type> apply(const std::vector<value_type>& v) const {
    if (v.size() != cols_) throw MismatchError("matrix-vector product: dimension mismatch");
    std::vector<value_type> out(rows_, ring_->zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = ring_->add(out[i], ring_->mul(data_[i * cols_ + j], v[j]));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    require_same_owner(a.ring_.get(), b.ring_.get(), "matrix comparison");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!a.ring_->equal(a.data_[k], b.data_[k])) return false;
    return true;
  }

  /// Rows separated by ';', entries by ','.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ';';
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ',';
        s += ring_->format((*this)(i, j));
      }
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

 private:
  void check_same_shape(const Matrix& b) const {
    require_same_owner(ring_.get(), b.ring_.get(), "matrix arithmetic");
    if (rows_ != b.rows_ || cols_ != b.cols_) throw MismatchError("matrix arithmetic: shapes differ");
  }

  std::shared_ptr<const R> ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// [A, B] = AB - BA.
template <Ring R>
Matrix<R> bracket(const Matrix<R>& a, const Matrix<R>& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw MismatchError("bracket: shapes differ");
  return a * b - b * a;
}

/// Left-normed bracket [x, y, z, ...] = [[[x, y], z], ...].
template <Ring R, class... Rest>
  requires(sizeof...(Rest) >= 1)
Matrix<R> bracket(const Matrix<R>& x, const Matrix<R>& y, const Rest&... rest) {
  return bracket(bracket(x, y), rest...);
}

}  // namespace slgen
