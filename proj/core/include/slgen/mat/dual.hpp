#pragma once

#include <memory>
#include <string>
#include <utility>

#include "slgen/mat/matrix.hpp"
#include "slgen/ring.hpp"

namespace slgen {

/// The dual numbers R[T]/(T^2). A value (a, b) stands for a + T*b.
template <Ring R>
class DualRing {
 public:
  using base_value = typename R::value_type;
  struct value_type {
    base_value a;
    base_value b;
  };

  static std::shared_ptr<const DualRing> over(std::shared_ptr<const R> base) {
    return std::shared_ptr<const DualRing>(new DualRing(std::move(base)));
  }

  const R& base() const { return *base_; }
  const std::shared_ptr<const R>& base_ptr() const { return base_; }

  value_type make(base_value a, base_value b) const { return {std::move(a), std::move(b)}; }
  value_type lift(base_value a) const { return {std::move(a), base_->zero()}; }
  value_type T() const { return {base_->zero(), base_->one()}; }

  value_type zero() const { return {base_->zero(), base_->zero()}; }
  value_type one() const { return {base_->one(), base_->zero()}; }
  value_type add(const value_type& x, const value_type& y) const { return {base_->add(x.a, y.a), base_->add(x.b, y.b)}; }
  value_type sub(const value_type& x, const value_type& y) const { return {base_->sub(x.a, y.a), base_->sub(x.b, y.b)}; }
  value_type neg(const value_type& x) const { return {base_->neg(x.a), base_->neg(x.b)}; }
  value_type mul(const value_type& x, const value_type& y) const {
    return {base_->mul(x.a, y.a), base_->add(base_->mul(x.a, y.b), base_->mul(x.b, y.a))};
  }
  value_type from_int(std::int64_t k) const { return lift(base_->from_int(k)); }
  bool is_zero(const value_type& x) const { return base_->is_zero(x.a) && base_->is_zero(x.b); }
  bool equal(const value_type& x, const value_type& y) const { return base_->equal(x.a, y.a) && base_->equal(x.b, y.b); }
  std::uint64_t characteristic() const { return base_->characteristic(); }
  std::string format(const value_type& x) const { return "[" + base_->format(x.a) + "+T" + base_->format(x.b) + "]"; }

 private:
  explicit DualRing(std::shared_ptr<const R> base) : base_(std::move(base)) {}
  std::shared_ptr<const R> base_;
};

/// T*x + y as a matrix over the dual numbers.
template <Ring R>
Matrix<DualRing<R>> dual_matrix(const std::shared_ptr<const DualRing<R>>& ring, const Matrix<R>& x, const Matrix<R>& y) {
  require_same_owner(x.ring_ptr().get(), y.ring_ptr().get(), "dual_matrix");
  require_same_owner(ring->base_ptr().get(), x.ring_ptr().get(), "dual_matrix");
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw MismatchError("dual_matrix: shapes differ");
  return Matrix<DualRing<R>>::generate(ring, x.rows(), x.cols(),
                                       [&](std::size_t i, std::size_t j) { return ring->make(y(i, j), x(i, j)); });
}

/// Componentwise projections a + T*b -> a and -> b.
template <Ring R>
std::pair<Matrix<R>, Matrix<R>> split_dual(const Matrix<DualRing<R>>& m) {
  const auto& base = m.ring().base_ptr();
  return {Matrix<R>::generate(base, m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return m(i, j).a; }),
          Matrix<R>::generate(base, m.rows(), m.cols(), [&](std::size_t i, std::size_t j) { return m(i, j).b; })};
}

}  // namespace slgen
