#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>

#include "slgen/error.hpp"
#include "slgen/random.hpp"

namespace slgen {

// Coefficient rings are runtime descriptors. Values (`R::value_type`) are
// plain data; every container that holds values also holds a pointer to the
// descriptor and refuses to combine values with a different descriptor.

template <class R>
concept Ring = requires(const R& r, const typename R::value_type& a, const typename R::value_type& b,
                        std::int64_t k) {
  typename R::value_type;
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.add(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, b) } -> std::convertible_to<typename R::value_type>;
  { r.from_int(k) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.equal(a, b) } -> std::same_as<bool>;
  { r.characteristic() } -> std::convertible_to<std::uint64_t>;
  { r.format(a) } -> std::convertible_to<std::string>;
};

template <class F>
concept Field = Ring<F> && requires(const F& f, const typename F::value_type& a) {
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
};

/// A field of order p^k with the extra hooks needed by factorization.
template <class F>
concept FiniteField = Field<F> && requires(const F& f, const typename F::value_type& a,
                                           const typename F::value_type& b, Rng& rng) {
  { f.degree_over_prime() } -> std::convertible_to<unsigned>;
  { f.random(rng) } -> std::convertible_to<typename F::value_type>;
  { f.pth_root(a) } -> std::convertible_to<typename F::value_type>;
  { f.hash(a) } -> std::convertible_to<std::size_t>;
  { f.less(a, b) } -> std::same_as<bool>;
};

inline void require_same_owner(const void* a, const void* b, const char* what) {
  if (a != b) throw MismatchError(std::string(what) + ": operands belong to different rings");
}

}  // namespace slgen
