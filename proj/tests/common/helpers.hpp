#pragma once

#include <cstdint>
#include <vector>

#include "slgen/ff/galois_field.hpp"
#include "slgen/mat/matrix.hpp"
#include "slgen/poly/polynomial.hpp"
#include "slgen/random.hpp"

namespace slgen::testing {

using Fq = GaloisField;
using FqMat = Matrix<GaloisField>;
using FqPolyT = Polynomial<GaloisField>;

inline FqMat random_matrix(const GaloisFieldPtr& f, std::size_t n, Rng& rng) {
  return FqMat::generate(f, n, n, [&](std::size_t, std::size_t) { return f->random(rng); });
}

inline FqMat random_sl(const GaloisFieldPtr& f, std::size_t n, Rng& rng) {
  auto m = random_matrix(f, n, rng);
  auto t = m.trace();
  return m - FqMat::generate(f, n, n, [&](std::size_t i, std::size_t j) {
           return i == n - 1 && j == n - 1 ? t : f->zero();
         });
}

inline FqMat random_invertible(const GaloisFieldPtr& f, std::size_t n, Rng& rng) {
  // Unit lower times unit upper triangular, times a random nonzero diagonal.
  auto lower = FqMat::generate(f, n, n, [&](std::size_t i, std::size_t j) {
    return i == j ? f->one() : (i > j ? f->random(rng) : f->zero());
  });
  auto upper = FqMat::generate(f, n, n, [&](std::size_t i, std::size_t j) {
    if (i == j) return static_cast<Fq::value_type>(1 + uniform_below(rng, f->order() - 1));
    return i < j ? f->random(rng) : f->zero();
  });
  return lower * upper;
}

inline FqPolyT random_monic(const GaloisFieldPtr& f, unsigned degree, Rng& rng) {
  std::vector<Fq::value_type> c(degree + 1);
  for (unsigned i = 0; i < degree; ++i) c[i] = f->random(rng);
  c[degree] = f->one();
  return FqPolyT(f, c);
}

/// Every monic polynomial of the given degree, in base-q counting order.
inline std::vector<FqPolyT> all_monic(const GaloisFieldPtr& f, unsigned degree) {
  std::vector<FqPolyT> out;
  std::vector<Fq::value_type> c(degree, 0);
  const auto q = static_cast<Fq::value_type>(f->order());
  for (;;) {
    auto full = c;
    full.push_back(1);
    out.emplace_back(f, full);
    std::size_t i = 0;
    while (i < degree && ++c[i] == q) c[i++] = 0;
    if (i == degree) return out;
  }
}

}  // namespace slgen::testing
