#include "slgen/lie/bits.hpp"

#include <bit>

namespace slgen {

BitMatrix::BitMatrix(unsigned n) : n_(n), rows_(n, 0) {
  if (n == 0 || n > kMaxSize) throw PreconditionError("BitMatrix: size must be in [1, 64]");
}

BitMatrix BitMatrix::identity(unsigned n) {
  BitMatrix m(n);
  for (unsigned i = 0; i < n; ++i) m.rows_[i] = std::uint64_t{1} << i;
  return m;
}

BitMatrix BitMatrix::from_matrix(const Matrix<GaloisField>& m) {
  if (m.ring().order() != 2) throw PreconditionError("BitMatrix: field must be F_2");
  BitMatrix out(static_cast<unsigned>(m.size()));
  for (unsigned i = 0; i < out.n_; ++i)
    for (unsigned j = 0; j < out.n_; ++j)
      if (m(i, j)) out.rows_[i] |= std::uint64_t{1} << j;
  return out;
}

Matrix<GaloisField> BitMatrix::to_matrix(const GaloisFieldPtr& f2) const {
  if (f2->order() != 2) throw PreconditionError("BitMatrix: field must be F_2");
  return Matrix<GaloisField>::generate(f2, n_, n_, [&](std::size_t i, std::size_t j) {
    return static_cast<GaloisField::value_type>(get(static_cast<unsigned>(i), static_cast<unsigned>(j)));
  });
}

void BitMatrix::set(unsigned i, unsigned j, bool v) {
  const auto bit = std::uint64_t{1} << j;
  rows_[i] = v ? rows_[i] | bit : rows_[i] & ~bit;
}

bool BitMatrix::trace() const {
  bool t = false;
  for (unsigned i = 0; i < n_; ++i) t ^= get(i, i);
  return t;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
  if (a.n_ != b.n_) throw MismatchError("BitMatrix: sizes differ");
  BitMatrix out(a.n_);
  for (unsigned i = 0; i < a.n_; ++i) out.rows_[i] = a.rows_[i] ^ b.rows_[i];
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.n_ != b.n_) throw MismatchError("BitMatrix: sizes differ");
  BitMatrix out(a.n_);
  for (unsigned i = 0; i < a.n_; ++i) {
    std::uint64_t acc = 0, row = a.rows_[i];
    while (row) {
      acc ^= b.rows_[static_cast<unsigned>(std::countr_zero(row))];
      row &= row - 1;
    }
    out.rows_[i] = acc;
  }
  return out;
}

BitMatrix bracket(const BitMatrix& a, const BitMatrix& b) { return a * b + b * a; }

std::vector<std::uint64_t> BitMatrix::flatten() const {
  const std::size_t bits = std::size_t{n_} * n_;
  std::vector<std::uint64_t> v((bits + 63) / 64, 0);
  std::size_t pos = 0;
  for (unsigned i = 0; i < n_; ++i, pos += n_) {
    const std::uint64_t row = rows_[i];
    const std::size_t w = pos / 64, off = pos % 64;
    v[w] |= row << off;
    if (off != 0 && off + n_ > 64) v[w + 1] |= row >> (64 - off);
  }
  return v;
}

BitSubspace::BitSubspace(std::size_t ambient_dim) : ambient_(ambient_dim), words_((ambient_dim + 63) / 64) {}

void BitSubspace::reduce(std::vector<std::uint64_t>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto p = pivots_[r];
    if (!((v[p / 64] >> (p % 64)) & 1U)) continue;
    const auto& row = rows_[r];
    for (std::size_t w = p / 64; w < words_; ++w) v[w] ^= row[w];
  }
}

bool BitSubspace::contains(std::vector<std::uint64_t> v) const {
  if (v.size() != words_) throw MismatchError("BitSubspace: vector has the wrong length");
  reduce(v);
  for (auto w : v)
    if (w) return false;
  return true;
}

bool BitSubspace::insert(std::vector<std::uint64_t> v) {
  if (v.size() != words_) throw MismatchError("BitSubspace: vector has the wrong length");
  reduce(v);
  std::size_t w = 0;
  while (w < words_ && v[w] == 0) ++w;
  if (w == words_) return false;
  const std::size_t piv = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
  for (auto& row : rows_)
    if ((row[piv / 64] >> (piv % 64)) & 1U)
      for (std::size_t k = piv / 64; k < words_; ++k) row[k] ^= v[k];
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  return true;
}

}  // namespace slgen
