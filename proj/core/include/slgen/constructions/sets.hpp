#pragma once

#include <cstddef>
#include <memory>
#include <unordered_set>
#include <vector>

#include "slgen/ff/galois_field.hpp"
#include "slgen/ff/tower.hpp"
#include "slgen/ring.hpp"

namespace slgen {

/// Candidate diagonal (lambda_1, ..., lambda_n) with its flags.
/// consistent: the n(n-1) ordered differences lambda_i - lambda_j, i != j,
/// are pairwise distinct. This is the same as asking that
/// lambda_i - lambda_j = lambda_k - lambda_l only for (i,j) = (k,l) or
/// i = j, k = l. It forces the values to be distinct.
template <Field F>
struct DiagonalSet {
  std::shared_ptr<const F> field;
  std::vector<typename F::value_type> values;
  bool sum_zero = false;
  bool all_nonzero = false;
  bool distinct = false;
  bool consistent = false;
};

namespace detail {

template <Field F>
struct ValueHash {
  const F* f;
  std::size_t operator()(const typename F::value_type& a) const { return f->hash(a); }
};

template <Field F>
struct ValueEq {
  const F* f;
  bool operator()(const typename F::value_type& a, const typename F::value_type& b) const { return f->equal(a, b); }
};

template <Field F>
bool all_distinct(const F& f, const std::vector<typename F::value_type>& v) {
  std::unordered_set<typename F::value_type, ValueHash<F>, ValueEq<F>> seen(v.size() * 2 + 1, ValueHash<F>{&f},
                                                                            ValueEq<F>{&f});
  for (const auto& a : v)
    if (!seen.insert(a).second) return false;
  return true;
}

}  // namespace detail

template <Field F>
DiagonalSet<F> check_consistent(std::shared_ptr<const F> field, std::vector<typename F::value_type> values) {
  const auto& f = *field;
  DiagonalSet<F> d{std::move(field), std::move(values)};
  auto sum = f.zero();
  d.all_nonzero = true;
  for (const auto& a : d.values) {
    sum = f.add(sum, a);
    if (f.is_zero(a)) d.all_nonzero = false;
  }
  d.sum_zero = f.is_zero(sum);
  d.distinct = detail::all_distinct(f, d.values);
  std::vector<typename F::value_type> diffs;
  diffs.reserve(d.values.size() * d.values.size());
  for (std::size_t i = 0; i < d.values.size(); ++i)
    for (std::size_t j = 0; j < d.values.size(); ++j)
      if (i != j) diffs.push_back(f.sub(d.values[i], d.values[j]));
  d.consistent = d.distinct && detail::all_distinct(f, diffs);
  return d;
}

/// Coordinates over the prime field F_p.
std::vector<GaloisField::value_type> prime_coordinates(const GaloisField& field, GaloisField::value_type a);
std::vector<GaloisField::value_type> prime_coordinates(const TowerField& tower, const TowerField::value_type& a);

/// n values with the dimension of their span. sharply_traceless holds when
/// the sum is zero and the rank is n - 1.
struct STSet {
  std::size_t size = 0;
  std::size_t rank = 0;
  bool sum_zero = false;
  bool sharply_traceless = false;
  bool consistent = false;
};

/// Which scalars the span is taken over.
enum class Scalars { prime, base };

/// Values in F_q, span over F_p.
STSet check_sharply_traceless_set(const GaloisFieldPtr& field, const std::vector<GaloisField::value_type>& values);
/// Values in F_{q^n}. Galois conjugates over F_q are tested with
/// Scalars::base: that is the notion the Frobenius criterion characterizes.
/// With q = p both choices agree.
STSet check_sharply_traceless_set(const TowerFieldPtr& tower, const std::vector<TowerField::value_type>& values,
                                  Scalars scalars = Scalars::base);

}  // namespace slgen
