#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "slgen/error.hpp"
#include "slgen/random.hpp"
#include "slgen/ring.hpp"

namespace slgen {

/// The finite field F_q = F_p[y]/(g), q = p^m, with m = 1 meaning F_p.
///
/// Elements are integer codes in [0, q): the code of c_0 + c_1 y + ... is
/// c_0 + c_1 p + c_2 p^2 + ..., so F_p sits inside as the codes below p.
/// Fields with q <= kTableLimit use precomputed addition and multiplication
/// tables. Instances are immutable and shared through shared_ptr.
class GaloisField {
 public:
  using value_type = std::uint32_t;
  static constexpr std::uint64_t kTableLimit = 1024;

  /// F_p.
  static std::shared_ptr<const GaloisField> prime(std::uint32_t p);
  /// F_{p^m} with the default (lowest) monic irreducible modulus.
  static std::shared_ptr<const GaloisField> create(std::uint32_t p, unsigned m);
  /// F_{p^m} with an explicit modulus, ascending integer coefficients mod p.
  static std::shared_ptr<const GaloisField> create(std::uint32_t p, const std::vector<std::int64_t>& modulus);

  /// Lowest monic irreducible of the given degree over F_p, scanning
  /// candidates x^m + c with c read as base-p digits c_0 + c_1 p + ...
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned m);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  unsigned degree_over_prime() const { return m_; }
  std::uint64_t order() const { return q_; }
  bool is_prime_field() const { return m_ == 1; }
  /// Ascending, monic, length m + 1. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  bool less(value_type a, value_type b) const { return a < b; }
  std::size_t hash(value_type a) const { return static_cast<std::size_t>(mix64(a)); }

  value_type add(value_type a, value_type b) const {
    if (!add_.empty()) return add_[static_cast<std::size_t>(a) * q_ + b];
    if (m_ == 1) {
      std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    return add_slow(a, b);
  }
  value_type neg(value_type a) const {
    if (m_ == 1) return a == 0 ? 0 : static_cast<value_type>(p_ - a);
    return neg_slow(a);
  }
  value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
  value_type mul(value_type a, value_type b) const {
    if (!mul_.empty()) return mul_[static_cast<std::size_t>(a) * q_ + b];
    if (m_ == 1) return static_cast<value_type>(std::uint64_t{a} * b % p_);
    return mul_slow(a, b);
  }
  /// Throws PreconditionError on zero.
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, std::uint64_t e) const;
  value_type from_int(std::int64_t k) const;
  /// a^(q/p), the inverse of the p-th power map.
  value_type pth_root(value_type a) const { return pow(a, q_ / p_); }
  value_type random(Rng& rng) const { return static_cast<value_type>(uniform_below(rng, q_)); }

  bool in_prime_field(value_type a) const { return a < p_; }
  /// Coefficients over F_p, length m.
  std::vector<std::uint32_t> digits(value_type a) const;
  value_type from_digits(std::span<const std::uint32_t> digits) const;
  /// The class of y (code p). Throws for prime fields.
  value_type generator() const;

  /// Integer for prime fields, "(c0,c1,...)" otherwise.
  std::string format(value_type a) const;
  /// Field spec text: "p", or "p^m:c0,...,cm" with the modulus spelled out.
  std::string spec() const;

  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

 private:
  GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  value_type add_slow(value_type a, value_type b) const;
  value_type neg_slow(value_type a) const;
  value_type mul_slow(value_type a, value_type b) const;

  std::uint32_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<value_type> add_;
  std::vector<value_type> mul_;
  std::vector<value_type> inv_;
};

using GaloisFieldPtr = std::shared_ptr<const GaloisField>;

bool is_prime(std::uint64_t n);

/// Parses "p", "p^m" or either followed by ":c0,c1,...,cm".
GaloisFieldPtr parse_field_spec(const std::string& text);

}  // namespace slgen
