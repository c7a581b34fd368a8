#pragma once

#include "slgen/error.hpp"
#include "slgen/mat/charpoly.hpp"
#include "slgen/mat/dual.hpp"
#include "slgen/mat/matrix.hpp"

namespace slgen {

/// Coefficients of the multilinearized sl_4 forms in characteristic 2.
/// With char_poly(M) = t^4 + alpha(M) t^2 - beta(M) t + det(M) and M = Tx + y:
/// alpha(M) = c + T d, beta(M) = a + T b.
template <Field F>
struct Sl4Forms {
  typename F::value_type a, b, c, d;
};

template <Field F>
Sl4Forms<F> forms_sl4(const Matrix<F>& x, const Matrix<F>& y) {
  if (x.rows() != 4 || x.cols() != 4 || y.rows() != 4 || y.cols() != 4)
    throw PreconditionError("forms_sl4(): matrices must be 4x4");
  if (x.ring().characteristic() != 2) throw PreconditionError("forms_sl4(): characteristic must be 2");
  if (!x.ring().is_zero(x.trace()) || !y.ring().is_zero(y.trace()))
    throw PreconditionError("forms_sl4(): matrices must be traceless");
  const auto dual = DualRing<F>::over(x.ring_ptr());
  const auto cp = char_poly(dual_matrix(dual, x, y));
  const auto alpha = cp.coeff(2);
  const auto beta = dual->neg(cp.coeff(1));
  return {beta.a, beta.b, alpha.a, alpha.b};
}

}  // namespace slgen
