#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "slgen/error.hpp"
#include "slgen/ring.hpp"

namespace slgen {

/// Univariate polynomial over a runtime ring, coefficients in ascending degree.
///
/// Trailing zero coefficients are stripped on construction and after every
/// operation, so a nonzero polynomial always has a nonzero leading
/// coefficient and division never sees a zero leading term.
template <Ring R>
class Polynomial {
 public:
  using value_type = typename R::value_type;

  explicit Polynomial(std::shared_ptr<const R> ring) : ring_(std::move(ring)) {}
  Polynomial(std::shared_ptr<const R> ring, std::vector<value_type> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Polynomial constant(std::shared_ptr<const R> ring, value_type c) {
    return Polynomial(std::move(ring), std::vector<value_type>{std::move(c)});
  }
  static Polynomial monomial(std::shared_ptr<const R> ring, value_type c, std::size_t degree) {
    std::vector<value_type> v(degree + 1, ring->zero());
    v[degree] = std::move(c);
    return Polynomial(std::move(ring), std::move(v));
  }
  static Polynomial x(std::shared_ptr<const R> ring) {
    auto one = ring->one();
    return monomial(std::move(ring), one, 1);
  }
  /// Integer coefficients, ascending, mapped through from_int.
  static Polynomial from_ints(std::shared_ptr<const R> ring, const std::vector<std::int64_t>& ints) {
    std::vector<value_type> v;
    v.reserve(ints.size());
    for (auto k : ints) v.push_back(ring->from_int(k));
    return Polynomial(std::move(ring), std::move(v));
  }

  const R& ring() const { return *ring_; }
  const std::shared_ptr<const R>& ring_ptr() const { return ring_; }
  const std::vector<value_type>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ring_->zero(); }
  value_type leading() const { return coeffs_.empty() ? ring_->zero() : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && ring_->equal(coeffs_.back(), ring_->one()); }
  bool is_one() const { return coeffs_.size() == 1 && ring_->equal(coeffs_[0], ring_->one()); }

  value_type eval(const value_type& at) const {
    value_type acc = ring_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ring_->add(ring_->mul(acc, at), *it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<value_type> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      v.push_back(ring_->mul(ring_->from_int(static_cast<std::int64_t>(i)), coeffs_[i]));
    return Polynomial(ring_, std::move(v));
  }

  Polynomial scaled(const value_type& s) const {
    std::vector<value_type> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = ring_->mul(s, coeffs_[i]);
    return Polynomial(ring_, std::move(v));
  }

  Polynomial monic() const
    requires Field<R>
  {
    if (is_zero()) throw PreconditionError("monic(): zero polynomial");
    return scaled(ring_->inv(leading()));
  }

  /// x^k * self
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<value_type> v(k, ring_->zero());
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(ring_, std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    const auto& r = *a.ring_;
    std::vector<value_type> v(std::max(a.coeffs_.size(), b.coeffs_.size()), r.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.add(a.coeff(i), b.coeff(i));
    return Polynomial(a.ring_, std::move(v));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    const auto& r = *a.ring_;
    std::vector<value_type> v(std::max(a.coeffs_.size(), b.coeffs_.size()), r.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.sub(a.coeff(i), b.coeff(i));
    return Polynomial(a.ring_, std::move(v));
  }
  Polynomial operator-() const {
    std::vector<value_type> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = ring_->neg(coeffs_[i]);
    return Polynomial(ring_, std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const auto& r = *a.ring_;
    std::vector<value_type> v(a.coeffs_.size() + b.coeffs_.size() - 1, r.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (r.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = r.add(v[i + j], r.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Polynomial(a.ring_, std::move(v));
  }

  /// Quotient and remainder; the divisor must be nonzero over a field.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
    requires Field<R>
  {
    a.check(b);
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    const auto& r = *a.ring_;
    if (a.degree() < b.degree()) return {Polynomial(a.ring_), a};
    std::vector<value_type> rem = a.coeffs_;
    const std::size_t db = b.coeffs_.size() - 1;
    std::vector<value_type> quot(rem.size() - db, r.zero());
    const value_type lead_inv = r.inv(b.coeffs_.back());
    for (std::size_t k = rem.size(); k-- > db;) {
      if (r.is_zero(rem[k])) continue;
      value_type c = r.mul(rem[k], lead_inv);
      quot[k - db] = c;
      for (std::size_t t = 0; t <= db; ++t) rem[k - db + t] = r.sub(rem[k - db + t], r.mul(c, b.coeffs_[t]));
    }
    rem.resize(db);
    return {Polynomial(a.ring_, std::move(quot)), Polynomial(a.ring_, std::move(rem))};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b)
    requires Field<R>
  {
    return divmod(a, b).first;
  }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b)
    requires Field<R>
  {
    return divmod(a, b).second;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!a.ring_->equal(a.coeffs_[i], b.coeffs_[i])) return false;
    return true;
  }

  /// Comma-separated ascending coefficients.
  std::string to_string() const {
    if (coeffs_.empty()) return ring_->format(ring_->zero());
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ',';
      s += ring_->format(coeffs_[i]);
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void normalize() {
    while (!coeffs_.empty() && ring_->is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  void check(const Polynomial& other) const {
    require_same_owner(ring_.get(), other.ring_.get(), "polynomial arithmetic");
  }

  std::shared_ptr<const R> ring_;
  std::vector<value_type> coeffs_;
};

}  // namespace slgen
