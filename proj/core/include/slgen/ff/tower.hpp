#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "slgen/ff/element.hpp"
#include "slgen/ff/galois_field.hpp"
#include "slgen/mat/matrix.hpp"
#include "slgen/poly/polynomial.hpp"

namespace slgen {

/// The top field F_{q^n} = F_q[z]/(h) over a base field F_q.
///
/// Values are coordinate vectors of length n in the basis 1, z, ..., z^(n-1),
/// so F_q-linear maps (Frobenius, trace) act coordinate-wise and subfield
/// membership is "all non-constant coordinates vanish".
class TowerField : public std::enable_shared_from_this<TowerField> {
 public:
  using base_value = GaloisField::value_type;
  using value_type = std::vector<base_value>;

  /// Uses the lowest monic irreducible of degree n over F_q (see default_modulus).
  static std::shared_ptr<const TowerField> create(GaloisFieldPtr base, unsigned n);
  /// Throws NotIrreducible unless `modulus` is monic irreducible of degree n >= 1.
  static std::shared_ptr<const TowerField> create(GaloisFieldPtr base, const Polynomial<GaloisField>& modulus);
  /// First monic irreducible of degree n over F_q when the lower coefficients
  /// are read as base-q digits c_0 + c_1 q + ... and counted upward.
  static Polynomial<GaloisField> default_modulus(const GaloisFieldPtr& base, unsigned n);

  const GaloisField& base() const { return *base_; }
  const GaloisFieldPtr& base_ptr() const { return base_; }
  unsigned degree() const { return n_; }
  const Polynomial<GaloisField>& modulus() const { return modulus_; }

  // Ring interface.
  value_type zero() const { return value_type(n_, 0); }
  value_type one() const { return embed(1); }
  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  value_type mul(const value_type& a, const value_type& b) const;
  value_type inv(const value_type& a) const;
  value_type pow(value_type a, std::uint64_t e) const;
  value_type from_int(std::int64_t k) const { return embed(base_->from_int(k)); }
  value_type scale(base_value c, const value_type& a) const;
  bool is_zero(const value_type& a) const;
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  bool less(const value_type& a, const value_type& b) const;
  std::size_t hash(const value_type& a) const;
  std::uint64_t characteristic() const { return base_->characteristic(); }
  unsigned degree_over_prime() const { return base_->degree() * n_; }
  value_type random(Rng& rng) const;
  value_type pth_root(const value_type& a) const;
  std::string format(const value_type& a) const;

  /// The class of z.
  value_type generator() const;
  value_type embed(base_value c) const;
  bool is_base(const value_type& a) const;
  /// Throws RepresentationError when a is not in F_q.
  base_value extract_base(const value_type& a) const;

  /// a^q, applied as the precomputed F_q-linear Frobenius matrix.
  value_type frobenius(const value_type& a) const;
  value_type frobenius_power(value_type a, unsigned k) const;
  /// a, Fr(a), ..., Fr^(n-1)(a).
  std::vector<value_type> conjugates(const value_type& a) const;
  /// sum_i Fr^i(a); throws RepresentationError if the sum leaves F_q.
  base_value trace(const value_type& a) const;
  /// g(Fr) a = sum_i g_i Fr^i(a) for g over F_q.
  value_type poly_in_frobenius(const Polynomial<GaloisField>& g, const value_type& a) const;
  /// n x n matrix over F_q whose column j holds the coordinates of Fr(z^j).
  const Matrix<GaloisField>& frobenius_matrix() const { return frobenius_matrix_; }

  /// q^n when it fits in 64 bits, otherwise 0.
  std::uint64_t order_or_zero() const;
  /// Element whose coordinates are the base-q digits of `index`.
  value_type from_index(std::uint64_t index) const;

  TowerField(const TowerField&) = delete;
  TowerField& operator=(const TowerField&) = delete;

 private:
  TowerField(GaloisFieldPtr base, Polynomial<GaloisField> modulus);
  void check_value(const value_type& a) const;

  GaloisFieldPtr base_;
  unsigned n_;
  Polynomial<GaloisField> modulus_;
  Matrix<GaloisField> frobenius_matrix_;
};

using TowerFieldPtr = std::shared_ptr<const TowerField>;
using TowerElement = Element<TowerField>;
using BaseElement = Element<GaloisField>;

// Owner-checked entry points. Each throws MismatchError when an element does
// not belong to the tower (or its base field) passed alongside it.
TowerElement frobenius(const TowerField& tower, const TowerElement& a);
BaseElement rel_trace(const TowerField& tower, const TowerElement& a);
TowerElement poly_in_frobenius(const TowerField& tower, const Polynomial<GaloisField>& g, const TowerElement& a);
TowerElement embed(const TowerField& tower, const BaseElement& a);
BaseElement extract_base(const TowerField& tower, const TowerElement& a);

}  // namespace slgen
