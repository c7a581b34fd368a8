#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "slgen/ff/galois_field.hpp"
#include "slgen/mat/matrix.hpp"

namespace slgen {

/// n x n matrix over F_2 with one machine word per row (n <= 64).
class BitMatrix {
 public:
  static constexpr unsigned kMaxSize = 64;

  explicit BitMatrix(unsigned n);
  static BitMatrix identity(unsigned n);
  /// Throws PreconditionError unless the matrix is square over a field of order 2.
  static BitMatrix from_matrix(const Matrix<GaloisField>& m);
  Matrix<GaloisField> to_matrix(const GaloisFieldPtr& f2) const;

  unsigned size() const { return n_; }
  bool get(unsigned i, unsigned j) const { return (rows_[i] >> j) & 1U; }
  void set(unsigned i, unsigned j, bool v);
  const std::vector<std::uint64_t>& rows() const { return rows_; }
  bool trace() const;

  friend BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix& a, const BitMatrix& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

  /// Coordinates in the order (0,0), (0,1), ..., packed 64 per word.
  std::vector<std::uint64_t> flatten() const;

 private:
  unsigned n_;
  std::vector<std::uint64_t> rows_;
};

BitMatrix bracket(const BitMatrix& a, const BitMatrix& b);

/// Reduced echelon subspace of F_2^d with word-packed rows.
class BitSubspace {
 public:
  explicit BitSubspace(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool insert(std::vector<std::uint64_t> v);
  bool contains(std::vector<std::uint64_t> v) const;

 private:
  void reduce(std::vector<std::uint64_t>& v) const;

  std::size_t ambient_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace slgen
