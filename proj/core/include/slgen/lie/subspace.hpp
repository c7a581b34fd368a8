#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "slgen/error.hpp"
#include "slgen/ring.hpp"

namespace slgen {

/// Subspace of F^d kept in reduced row echelon form: rows sorted by pivot,
/// each pivot entry 1 and every other row zero in that column.
template <Field F>
class Subspace {
 public:
  using value_type = typename F::value_type;
  using Vector = std::vector<value_type>;

  Subspace(std::shared_ptr<const F> field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection onto the span along the pivot columns.
  Vector reduce(Vector v) const {
    check(v);
    const auto& f = *field_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto c = v[pivots_[r]];
      if (f.is_zero(c)) continue;
      for (std::size_t j = pivots_[r]; j < ambient_; ++j) v[j] = f.sub(v[j], f.mul(c, rows_[r][j]));
    }
    return v;
  }

  bool contains(const Vector& v) const {
    const auto r = reduce(v);
    for (const auto& c : r)
      if (!field_->is_zero(c)) return false;
    return true;
  }

  /// Adds v to the span. Returns true when the dimension grew.
  bool insert(const Vector& v) {
    auto w = reduce(v);
    const auto& f = *field_;
    std::size_t piv = 0;
    while (piv < ambient_ && f.is_zero(w[piv])) ++piv;
    if (piv == ambient_) return false;
    const auto inv = f.inv(w[piv]);
    for (std::size_t j = piv; j < ambient_; ++j) w[j] = f.mul(w[j], inv);
    for (auto& row : rows_) {
      const auto c = row[piv];
      if (f.is_zero(c)) continue;
      for (std::size_t j = piv; j < ambient_; ++j) row[j] = f.sub(row[j], f.mul(c, w[j]));
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(w));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    return true;
  }

 private:
  void check(const Vector& v) const {
    if (v.size() != ambient_) throw MismatchError("subspace: vector has the wrong length");
  }

  std::shared_ptr<const F> field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace slgen
