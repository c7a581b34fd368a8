#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slgen/constructions/sets.hpp"
#include "slgen/ff/tower.hpp"
#include "slgen/lie/certificate.hpp"
#include "slgen/poly/phi.hpp"

namespace slgen {

enum class Strategy { consistent, sidon, normal, sharply_traceless, automatic };

/// "consistent", "sidon", "normal", "sharply-traceless", "auto".
std::string to_string(Strategy s);
Strategy parse_strategy(const std::string& s);

/// The pair (diag(D), E - I). D must be consistent with zero sum.
GenPairCertificate genpair_from_consistent(const DiagonalSet<GaloisField>& d, std::string strategy = "consistent");

/// (n, tr a, ..., tr a^(n-1)) in the first row, minus the identity.
Matrix<GaloisField> trace_row_matrix(const TowerField& tower, const TowerField::value_type& alpha);

/// (companion(f), trace_row_matrix(alpha)) for the minimal polynomial f of
/// alpha. Requires tr(alpha) = 0 and consistent conjugates (else
/// RootsNotConsistent).
GenPairCertificate companion_genpair(const TowerField& tower, const TowerField::value_type& alpha,
                                     std::string strategy = "companion");

/// Same with alpha the class of x in F_q[x]/(f). f must be monic
/// irreducible (else NotIrreducible) with zero x^(n-1) coefficient.
GenPairCertificate companion_genpair(const FqPoly& f);

/// {1, y, ..., y^(n-2), -sum} when F_q has degree >= n - 1 over F_p,
/// otherwise {1, 2, ..., 2^(n-2), 1 - 2^(n-1)}. Checked; throws
/// ConsistencyLost if the result is not consistent.
DiagonalSet<GaloisField> consistent_diagonal(const GaloisFieldPtr& field, unsigned n);

/// Strategy chosen by auto_genpair: Sidon when p > 4 max|S| for the greedy
/// diagonal S, then normal when p does not divide n, else sharply traceless.
Strategy auto_strategy(unsigned n, const GaloisFieldPtr& field);

/// Builds and certifies a generating pair of sl_n(F_q). Throws
/// EvenCharacteristic for p = 2 and ExceptionalCase for (n, p) = (3, 3).
/// `top_modulus` overrides the modulus of F_{q^n} for the companion routes.
GenPairCertificate construct_genpair(Strategy strategy, unsigned n, const GaloisFieldPtr& field, std::uint64_t seed,
                                     const std::optional<FqPoly>& top_modulus = std::nullopt);

inline GenPairCertificate auto_genpair(unsigned n, const GaloisFieldPtr& field, std::uint64_t seed) {
  return construct_genpair(Strategy::automatic, n, field, seed);
}

}  // namespace slgen
