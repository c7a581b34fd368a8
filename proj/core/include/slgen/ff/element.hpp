#pragma once

#include <memory>
#include <ostream>
#include <utility>

#include "slgen/ring.hpp"

namespace slgen {

/// A ring value tagged with its owner. Mixed-owner arithmetic throws
/// MismatchError, even between isomorphic presentations.
template <Ring R>
class Element {
 public:
  using value_type = typename R::value_type;

  Element(std::shared_ptr<const R> ring, value_type value) : ring_(std::move(ring)), value_(std::move(value)) {}

  const R& ring() const { return *ring_; }
  const std::shared_ptr<const R>& ring_ptr() const { return ring_; }
  const value_type& value() const { return value_; }
  bool is_zero() const { return ring_->is_zero(value_); }

  friend Element operator+(const Element& a, const Element& b) {
    a.check(b);
    return {a.ring_, a.ring_->add(a.value_, b.value_)};
  }
  friend Element operator-(const Element& a, const Element& b) {
    a.check(b);
    return {a.ring_, a.ring_->sub(a.value_, b.value_)};
  }
  friend Element operator*(const Element& a, const Element& b) {
    a.check(b);
    return {a.ring_, a.ring_->mul(a.value_, b.value_)};
  }
  Element operator-() const { return {ring_, ring_->neg(value_)}; }

  Element inverse() const
    requires Field<R>
  {
    return {ring_, ring_->inv(value_)};
  }
  friend Element operator/(const Element& a, const Element& b)
    requires Field<R>
  {
    a.check(b);
    return {a.ring_, a.ring_->mul(a.value_, a.ring_->inv(b.value_))};
  }

  friend bool operator==(const Element& a, const Element& b) {
    a.check(b);
    return a.ring_->equal(a.value_, b.value_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Element& a) { return os << a.ring_->format(a.value_); }

 private:
  void check(const Element& other) const { require_same_owner(ring_.get(), other.ring_.get(), "element arithmetic"); }

  std::shared_ptr<const R> ring_;
  value_type value_;
};

}  // namespace slgen
