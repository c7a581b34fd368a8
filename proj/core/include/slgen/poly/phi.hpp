#pragma once

#include <vector>

#include "slgen/ff/galois_field.hpp"
#include "slgen/ff/tower.hpp"
#include "slgen/poly/polynomial.hpp"

namespace slgen {

using FqPoly = Polynomial<GaloisField>;

struct PhiFactor {
  FqPoly pi;          // monic irreducible
  unsigned mult;      // multiplicity in Phi
  FqPoly cofactor;    // Phi / pi
};

/// Phi(x) = (x^n - 1)/(x - 1) = x^(n-1) + ... + 1 over F_q, with its prime
/// factors sorted by (degree, coefficients).
struct PhiFactorization {
  unsigned n;
  FqPoly phi;
  std::vector<PhiFactor> factors;
};

PhiFactorization phi_factorization(const GaloisFieldPtr& field, unsigned n);
inline PhiFactorization phi_factorization(const TowerField& tower) {
  return phi_factorization(tower.base_ptr(), tower.degree());
}

/// x^n - 1 over the field.
FqPoly frobenius_min_poly(const GaloisFieldPtr& field, unsigned n);

/// All monic divisors of x^n - 1, built from its factorization.
std::vector<FqPoly> divisors_of_xn_minus_1(const GaloisFieldPtr& field, unsigned n);

}  // namespace slgen
