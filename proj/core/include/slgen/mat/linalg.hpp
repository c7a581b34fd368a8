#pragma once

#include <cstddef>
#include <vector>

#include "slgen/error.hpp"
#include "slgen/mat/matrix.hpp"

namespace slgen {

/// Reduced row echelon form: pivot columns hold a single 1.
template <Field F>
struct RowEchelon {
  std::vector<std::vector<typename F::value_type>> rows;
  std::vector<std::size_t> pivots;
};

template <Field F>
RowEchelon<F> row_echelon(const Matrix<F>& m) {
  const auto& f = m.ring();
  using V = typename F::value_type;
  std::vector<std::vector<V>> a(m.rows(), std::vector<V>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  RowEchelon<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && f.is_zero(a[piv][c])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const V inv = f.inv(a[r][c]);
    for (auto& v : a[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || f.is_zero(a[i][c])) continue;
      const V factor = a[i][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = f.sub(a[i][j], f.mul(factor, a[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return row_echelon(m).pivots.size();
}

/// Basis of {v : M v = 0}, one vector per free column (that entry set to 1).
template <Field F>
std::vector<std::vector<typename F::value_type>> kernel(const Matrix<F>& m) {
  const auto& f = m.ring();
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = f.neg(ech.rows[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Throws PreconditionError when the matrix is singular.
template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
  const std::size_t n = m.size();
  const auto& ring = m.ring_ptr();
  auto aug = Matrix<F>::generate(ring, n, 2 * n, [&](std::size_t i, std::size_t j) {
    if (j < n) return m(i, j);
    return j - n == i ? ring->one() : ring->zero();
  });
  const auto ech = row_echelon(aug);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
  return Matrix<F>::generate(ring, n, n, [&](std::size_t i, std::size_t j) { return ech.rows[i][n + j]; });
}

}  // namespace slgen
