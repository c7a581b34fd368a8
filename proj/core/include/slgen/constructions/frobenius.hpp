#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slgen/ff/tower.hpp"
#include "slgen/lie/subspace.hpp"
#include "slgen/poly/phi.hpp"

namespace slgen {

/// True when the n conjugates Fr^i(a) are F_q-linearly independent.
bool is_normal(const TowerField& tower, const TowerField::value_type& a);

/// Prod (x - Fr^i(a)) over i < n, with coefficients moved to F_q. Throws
/// RepresentationError if a coefficient is not in F_q.
FqPoly conjugate_polynomial(const TowerField& tower, const TowerField::value_type& a);

struct NormalElementReport {
  TowerField::value_type alpha;
  bool is_normal = false;
  /// alpha - tr(alpha)/n and its minimal polynomial; only when p does not divide n.
  std::optional<TowerField::value_type> beta;
  std::optional<FqPoly> min_poly_beta;
  /// Trial index of the sampled alpha.
  std::uint64_t trial = 0;
};

NormalElementReport normal_element_report(const TowerField& tower, const TowerField::value_type& alpha);

/// Samples alpha from trial_rng(seed, i), i = 0, 1, ... until a normal one
/// turns up. Throws RetryBudgetExhausted after `budget` trials.
NormalElementReport find_normal_element(const TowerField& tower, std::uint64_t seed, std::uint64_t budget = 10000);

/// Phi(Fr) a = 0 and Phi_pi(Fr) a != 0 for every prime factor pi of Phi.
bool is_sharply_traceless_element(const TowerField& tower, const TowerField::value_type& a,
                                  const PhiFactorization& phi);
bool is_sharply_traceless_element(const TowerField& tower, const TowerField::value_type& a);

/// Root subspaces of Fr inside F_{q^n}, as subspaces of F_q^n.
struct FrobeniusPart {
  FqPoly pi;
  unsigned mult = 0;
  Subspace<GaloisField> v;  // ker pi^mult(Fr)
  Subspace<GaloisField> w;  // ker pi^(mult-1)(Fr)
  Subspace<GaloisField> x;  // complement of w in v, from the echelon basis of v
};

struct FrobeniusDecomposition {
  TowerFieldPtr tower;
  std::vector<FrobeniusPart> parts;
  Subspace<GaloisField> u;  // complement of V_(x-1) in ker (x-1)^e(Fr), e its multiplicity in x^n - 1
};

/// dim ker g(Fr) on F_{q^n}.
std::size_t frobenius_kernel_dim(const TowerField& tower, const FqPoly& g);

/// Throws InternalError if a dimension differs from the predicted one.
FrobeniusDecomposition build_decomposition(const TowerFieldPtr& tower);

/// Sum over pi of the first basis vector of X_pi.
TowerField::value_type construct_st_element(const FrobeniusDecomposition& dec);

/// q^(n - 1 - sum deg pi) * prod (q^deg pi - 1) over the prime factors of
/// Phi. Throws RepresentationError on 64-bit overflow.
std::uint64_t count_st_elements(const GaloisFieldPtr& field, unsigned n);

/// Exhaustive count over the q^n elements of the tower; empty when q^n
/// exceeds `cap`.
std::optional<std::uint64_t> count_st_brute(const TowerField& tower, std::uint64_t cap);

/// gamma = Fr(a) - a for a drawn from trial_rng(seed, i), until gamma is
/// sharply traceless; falls back to construct_st_element after `budget`
/// trials.
TowerField::value_type find_st_element(const TowerFieldPtr& tower, std::uint64_t seed, std::uint64_t budget = 64);

}  // namespace slgen
