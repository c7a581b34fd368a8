#pragma once

#include <vector>

#include "slgen/mat/matrix.hpp"
#include "slgen/poly/polynomial.hpp"

namespace slgen {

/// det(tI - A) by the Samuelson-Berkowitz recursion. Uses only ring
/// operations, so it is valid over rings with zero divisors such as the
/// dual numbers.
template <Ring R>
Polynomial<R> char_poly(const Matrix<R>& a) {
  const std::size_t n = a.size();
  const auto& r = a.ring();
  using V = typename R::value_type;
  // Coefficients in descending degree; starts as the char poly of the empty block.
  std::vector<V> poly{r.one()};
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t k = n - i;  // size of the block A[i.., i..]
    // Toeplitz column (1, -a_ii, -R C, -R A1 C, ..., -R A1^(k-2) C).
    std::vector<V> col{r.one(), r.neg(a(i, i))};
    std::vector<V> vec(k - 1);  // A1^j C, starting with C
    for (std::size_t t = 0; t + 1 < k; ++t) vec[t] = a(i + 1 + t, i);
    for (std::size_t j = 0; j + 1 < k; ++j) {
      V dot = r.zero();
      for (std::size_t t = 0; t + 1 < k; ++t) dot = r.add(dot, r.mul(a(i, i + 1 + t), vec[t]));
      col.push_back(r.neg(dot));
      if (j + 2 < k) {
        std::vector<V> next(k - 1, r.zero());
        for (std::size_t s = 0; s + 1 < k; ++s)
          for (std::size_t t = 0; t + 1 < k; ++t) next[s] = r.add(next[s], r.mul(a(i + 1 + s, i + 1 + t), vec[t]));
        vec = std::move(next);
      }
    }
    std::vector<V> out(k + 1, r.zero());
    for (std::size_t row = 0; row <= k; ++row)
      for (std::size_t c = 0; c < poly.size() && c <= row; ++c) out[row] = r.add(out[row], r.mul(col[row - c], poly[c]));
    poly = std::move(out);
  }
  return Polynomial<R>(a.ring_ptr(), std::vector<V>(poly.rbegin(), poly.rend()));
}

/// p(A) by Horner's rule.
template <Ring R>
Matrix<R> eval_at_matrix(const Polynomial<R>& p, const Matrix<R>& a) {
  require_same_owner(p.ring_ptr().get(), a.ring_ptr().get(), "eval_at_matrix");
  const std::size_t n = a.size();
  auto acc = Matrix<R>::zero(a.ring_ptr(), n);
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * a + Matrix<R>::scalar(a.ring_ptr(), n, p.coeff(static_cast<std::size_t>(i)));
  return acc;
}

}  // namespace slgen
