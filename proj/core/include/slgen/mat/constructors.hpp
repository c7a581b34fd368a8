#pragma once

#include <cstddef>
#include <vector>

#include "slgen/error.hpp"
#include "slgen/mat/matrix.hpp"
#include "slgen/poly/polynomial.hpp"

namespace slgen {

/// E - I: zero diagonal, ones elsewhere. Traceless for every n.
template <Ring R>
Matrix<R> one_matrix(const std::shared_ptr<const R>& ring, std::size_t n) {
  return Matrix<R>::generate(ring, n, n, [&](std::size_t i, std::size_t j) { return i == j ? ring->zero() : ring->one(); });
}

/// E_ij, indices 0-based.
template <Ring R>
Matrix<R> elementary(const std::shared_ptr<const R>& ring, std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw PreconditionError("elementary(): index out of range");
  return Matrix<R>::generate(ring, n, n,
                             [&](std::size_t r, std::size_t c) { return r == i && c == j ? ring->one() : ring->zero(); });
}

template <Ring R>
Matrix<R> diag(const std::shared_ptr<const R>& ring, const std::vector<typename R::value_type>& values) {
  const std::size_t n = values.size();
  return Matrix<R>::generate(ring, n, n, [&](std::size_t i, std::size_t j) { return i == j ? values[i] : ring->zero(); });
}

/// Companion matrix of a monic f of degree n: ones on the subdiagonal and
/// -c_0, ..., -c_{n-1} down the last column. Its characteristic polynomial
/// is f, and (1, a, ..., a^(n-1)) is a left eigenvector for each root a.
template <Ring R>
Matrix<R> companion(const Polynomial<R>& f) {
  if (f.degree() < 1) throw PreconditionError("companion(): degree must be >= 1");
  if (!f.is_monic()) throw PreconditionError("companion(): polynomial must be monic");
  const auto n = static_cast<std::size_t>(f.degree());
  const auto& r = f.ring();
  return Matrix<R>::generate(f.ring_ptr(), n, n, [&](std::size_t i, std::size_t j) {
    if (j == n - 1) return r.neg(f.coeff(i));
    return i == j + 1 ? r.one() : r.zero();
  });
}

}  // namespace slgen
